"""Role-based permission checks.

The permission catalog is closed: fourteen named actions, granted per role
through RoleGrant rows.  ``verify`` is the single authorization decision
point for the whole service and denies by default; a missing grant row is a
"no" just like an explicit ``Authorize=false``.  The service also counts
its own calls so tests can assert that every guarded operation checks
exactly once.
"""
from __future__ import annotations

import threading

from .errors import Forbidden, IncompleteMap, NotFound, UnknownPermission
from .storage import Criterion, Mutation, OP_EQ

PERMISSION_CATALOG = (
    "asset.add",
    "asset.search",
    "asset.update",
    "group.create",
    "group.edit",
    "location.add",
    "location.edit",
    "lab.assign",
    "software.add",
    "software.edit",
    "license.assign",
    "request.close",
    "request.approve",
    "admin.permissions",
)


class PermissionService:
    def __init__(self, store):
        self.store = store
        self.verify_count = 0
        self._count_lock = threading.Lock()

    # -- decision point -----------------------------------------------------

    def verify(self, role_id: int | None, permission: str) -> bool:
        """True only when the role holds an explicit positive grant."""
        with self._count_lock:
            self.verify_count += 1
        if permission not in PERMISSION_CATALOG:
            raise UnknownPermission(f"no such permission {permission!r}")
        if role_id is None:  # local administrative session, below the API
            return True
        perm = self._permission_row(permission)
        if perm is None:
            return False
        grants = self.store.select("RoleGrant", [
            Criterion("RoleID", OP_EQ, role_id),
            Criterion("PermissionID", OP_EQ, perm["PermissionID"]),
        ]).items
        if not grants:
            return False
        return bool(grants[0]["Authorize"])

    def require(self, session, permission: str) -> None:
        if not self.verify(session.role_id, permission):
            raise Forbidden(f"{permission} is not granted")

    # -- grant administration ------------------------------------------------

    def list_grants(self, session, role_id: int) -> dict[str, bool]:
        """Complete {permission: authorized} map for one role."""
        self.require(session, "admin.permissions")
        self._role_row(role_id)
        by_id = {p["PermissionID"]: p["PermissionName"]
                 for p in self.store.select("Permission").items}
        held = {}
        for grant in self.store.select("RoleGrant", [
                Criterion("RoleID", OP_EQ, role_id)]).items:
            name = by_id.get(grant["PermissionID"])
            if name is not None:
                held[name] = bool(grant["Authorize"])
        return {name: held.get(name, False) for name in PERMISSION_CATALOG}

    def set_grant(self, session, role_id: int, permission: str,
                  authorize: bool) -> None:
        self.require(session, "admin.permissions")
        self._role_row(role_id)
        self._write_grant(role_id, permission, authorize)

    def replace_grants(self, session, role_id: int,
                       grants: dict[str, bool]) -> None:
        """Overwrite a role's whole grant map; the map must be complete."""
        self.require(session, "admin.permissions")
        self._role_row(role_id)
        for name in grants:
            if name not in PERMISSION_CATALOG:
                raise UnknownPermission(f"no such permission {name!r}")
        missing = [name for name in PERMISSION_CATALOG if name not in grants]
        if missing:
            raise IncompleteMap(
                f"grant map is missing {', '.join(missing)}")
        for name in PERMISSION_CATALOG:
            self._write_grant(role_id, name, bool(grants[name]))

    def _write_grant(self, role_id: int, permission: str,
                     authorize: bool) -> None:
        if permission not in PERMISSION_CATALOG:
            raise UnknownPermission(f"no such permission {permission!r}")
        perm = self._permission_row(permission)
        if perm is None:
            raise UnknownPermission(f"permission {permission!r} is not "
                                    "provisioned")
        existing = self.store.select("RoleGrant", [
            Criterion("RoleID", OP_EQ, role_id),
            Criterion("PermissionID", OP_EQ, perm["PermissionID"]),
        ]).items
        if existing:
            self.store.apply([Mutation.update(
                "RoleGrant", existing[0]["GrantID"],
                {"Authorize": authorize})])
        else:
            self.store.apply([Mutation.insert(
                "RoleGrant", RoleID=role_id,
                PermissionID=perm["PermissionID"], Authorize=authorize)])

    # -- internals ----------------------------------------------------------

    def _permission_row(self, name: str) -> dict | None:
        rows = self.store.select("Permission", [
            Criterion("PermissionName", OP_EQ, name)]).items
        return rows[0] if rows else None

    def _role_row(self, role_id: int) -> dict:
        row = self.store.get("Role", role_id)
        if row is None:
            raise NotFound(f"role {role_id} not found")
        return row
