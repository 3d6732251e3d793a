from concurrent.futures import ThreadPoolExecutor

from app.services import cache_service


def test_set_and_get():
    cache_service.set_cache("ns", ("a", 1), 42)
    assert cache_service.get_cache("ns", ("a", 1)) == 42
    assert cache_service.get_cache("ns", ("a", 2)) is None
    assert cache_service.get_cache("other", ("a", 1)) is None


def test_clear_one_namespace():
    cache_service.set_cache("a", 1, "x")
    cache_service.set_cache("b", 1, "y")
    cache_service.clear_cache("a")
    assert cache_service.cache_size("a") == 0
    assert cache_service.get_cache("b", 1) == "y"


def test_snapshot_is_a_copy():
    cache_service.set_cache("ns", "k", 1)
    snap = cache_service.snapshot("ns")
    snap["k"] = 2
    assert cache_service.get_cache("ns", "k") == 1


def test_concurrent_writers():
    """ Should keep every key written from several threads."""
    with ThreadPoolExecutor(max_workers=4) as pool:
        list(pool.map(lambda i: cache_service.set_cache("ns", i, i * i), range(200)))
    assert cache_service.cache_size("ns") == 200
    assert cache_service.get_cache("ns", 13) == 169
