"""One object owning the store and every service.

The HTTP layer, the command line, and the tests all build an App and talk
to the services hanging off it; nothing below this file knows how the
store was opened or which backend sits behind it.
"""
from __future__ import annotations

from .assets import AssetService
from .auth import AuthService
from .locations import LocationService
from .permissions import PermissionService
from .requests import RequestService
from .software import SoftwareService
from .storage import FileStore, MemoryStore, load_seed


class App:
    def __init__(self, store, *, now=None, outbox_path: str | None = None,
                 search_config_path: str | None = None):
        self.store = store
        self.permissions = PermissionService(store)
        self.auth = AuthService(store, self.permissions, now=now,
                                outbox_path=outbox_path)
        self.assets = AssetService(store, self.permissions)
        self.locations = LocationService(store, self.permissions)
        if search_config_path:
            self.locations.reload_config(search_config_path)
        self.software = SoftwareService(store, self.permissions)
        self.requests = RequestService(store, self.permissions)

    def close(self) -> None:
        close = getattr(self.store, "close", None)
        if close is not None:
            close()


def build_app(backend: str = "memory", *, data_path: str | None = None,
              fixture_path: str | None = None, now=None,
              outbox_path: str | None = None,
              search_config_path: str | None = None) -> App:
    """Open a store and wire the services around it.

    A fixture, when given, seeds the store only if it holds no users yet,
    so reopening a file store does not double-load."""
    if backend == "memory":
        store = MemoryStore()
    elif backend == "file":
        if not data_path:
            raise ValueError("the file backend needs data_path")
        store = FileStore(data_path)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if fixture_path and not store.count("User"):
        load_seed(store, fixture_path)
    return App(store, now=now, outbox_path=outbox_path,
               search_config_path=search_config_path)
