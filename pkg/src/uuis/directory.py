"""Lookups shared by every service: users, roles, memberships and the
faculty a caller acts for.

Data visibility is tiered by role level: 0 sees own records, 1 the active
department, 2 the whole faculty, 3 everything.  The helpers here resolve
the caller's side of those rules; each service applies them to its rows.
"""
from __future__ import annotations

from .errors import NotFound
from .storage import Criterion, OP_EQ


def get_user(store, user_id: int) -> dict:
    row = store.get("User", user_id)
    if row is None:
        raise NotFound(f"user {user_id} not found")
    return row


def user_by_name(store, username: str) -> dict | None:
    rows = store.select("User", [Criterion("UserName", OP_EQ,
                                           username)]).items
    return rows[0] if rows else None


def role_level(store, role_id: int) -> int:
    role = store.get("Role", role_id)
    if role is None:
        raise NotFound(f"role {role_id} not found")
    return role["Level"]


def membership_departments(store, user_id: int) -> list[dict]:
    """Departments the user belongs to, ordered by department id."""
    rows = store.select("Membership",
                        [Criterion("UserID", OP_EQ, user_id)]).items
    departments = [store.get("Department", m["DepartmentID"]) for m in rows]
    return sorted((d for d in departments if d),
                  key=lambda d: d["DepartmentID"])


def faculty_of_department(store, department_id: int) -> dict | None:
    department = store.get("Department", department_id)
    if department is None:
        return None
    return store.get("Faculty", department["FacultyID"])


def session_level(store, session) -> int:
    if session.role_id is None:  # local administrative session
        return 3
    return role_level(store, session.role_id)


def session_faculty(store, session) -> dict | None:
    """Faculty of the session's active department, if any."""
    if session.department_id is None:
        return None
    return faculty_of_department(store, session.department_id)


def full_name(user: dict) -> str:
    parts = [user.get("FirstName") or "", user.get("LastName") or ""]
    name = " ".join(p for p in parts if p)
    return name or user["UserName"]
