"""
This module provides a shared in-process memo store for values that are
expensive to compute and fully determined by their key.

It's used by the forest-degree recursion to remember the degree of every
tree it has seen. Lookups are safe from several threads; a racing insert
writes the same value twice, which is harmless because values are a pure
function of the key.
"""
from __future__ import annotations

import threading
from typing import Any, Hashable, Optional

_lock = threading.Lock()
_store: dict[str, dict[Hashable, Any]] = {}


def set_cache(namespace: str, key: Hashable, value: Any) -> None:
    """Store a value under (namespace, key)."""
    with _lock:
        _store.setdefault(namespace, {})[key] = value


def get_cache(namespace: str, key: Hashable) -> Optional[Any]:
    """Retrieve a value, or None when absent."""
    with _lock:
        return _store.get(namespace, {}).get(key)


def cache_size(namespace: str) -> int:
    with _lock:
        return len(_store.get(namespace, {}))


def snapshot(namespace: str) -> dict[Hashable, Any]:
    """Copy of one namespace."""
    with _lock:
        return dict(_store.get(namespace, {}))


def clear_cache(namespace: str | None = None) -> None:
    """Drop one namespace, or everything."""
    with _lock:
        if namespace is None:
            _store.clear()
        else:
            _store.pop(namespace, None)
