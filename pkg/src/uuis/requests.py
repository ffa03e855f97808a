"""Change requests.

General requests carry a category and a free-text description; specific
requests name an inventory action and reference the things it touches
(bar code, location name, group, user, compartment).  Both start Pending.
General requests close with a mandatory note; specific requests are
approved.  No other status movement exists, and an approval never applies
the described inventory change itself.

Search visibility follows the caller's level: 0 sees own submissions,
1 sees requests from level-0/1 users in the active department, 2 sees
requests from level-0/1/2 users in the caller's faculty, 3 sees all.
"""
from __future__ import annotations

from . import directory, errors
from .auth import Session
from .permissions import PermissionService
from .schema import (GENERAL_CATEGORIES, REQUEST_STATUSES,
                     SPECIFIC_CATEGORIES)
from .storage import Criterion, Mutation, OP_EQ
from .storage.gateway import MemoryStore

DESCRIPTION_CAP = 256
PAYLOAD_KEYS = ("BarCode", "LocationName", "GroupID", "UserName",
                "CompartmentNo")

_TRANSITION_ATTEMPTS = 16


class RequestService:
    def __init__(self, store: MemoryStore, permissions: PermissionService):
        self.store = store
        self.permissions = permissions

    # -- submission -----------------------------------------------------------

    def submit_general(self, session: Session, category: str,
                       description: str) -> int:
        """Open to every authenticated role; no permission is checked."""
        if category not in GENERAL_CATEGORIES:
            raise errors.BadCategory(
                f"general requests take one of "
                f"{', '.join(GENERAL_CATEGORIES)}", field="Category")
        if not description:
            raise errors.MissingDescription(
                "a general request needs a description",
                field="Description")
        return self.store.apply([Mutation.insert(
            "Request", UserID=session.user_id, Kind="General",
            Category=category,
            Description=description[:DESCRIPTION_CAP])])[0]

    def submit_specific(self, session: Session, category: str,
                        payload: dict = None,
                        description: str = None) -> int:
        if category not in SPECIFIC_CATEGORIES:
            raise errors.BadCategory(
                f"specific requests take one of "
                f"{', '.join(SPECIFIC_CATEGORIES)}", field="Category")
        payload = dict(payload or {})
        for key in payload:
            if key not in PAYLOAD_KEYS:
                raise errors.UnknownField(
                    f"{key!r} is not a request payload field", field=key)
        self._check_payload_refs(payload)
        if description:
            payload["Description"] = description[:DESCRIPTION_CAP]
        return self.store.apply([Mutation.insert(
            "Request", UserID=session.user_id, Kind="Specific",
            Category=category, **payload)])[0]

    def _check_payload_refs(self, payload: dict) -> None:
        barcode = payload.get("BarCode")
        if barcode is not None and not self.store.count(
                "PhysicalAsset", [Criterion("BarCode", OP_EQ, barcode)]):
            raise errors.UnresolvedReference(
                f"no asset carries bar code {barcode!r}", field="BarCode")
        group_id = payload.get("GroupID")
        if group_id is not None and \
                self.store.get("Group", group_id) is None:
            raise errors.UnresolvedReference(
                f"no such group: {group_id}", field="GroupID")
        username = payload.get("UserName")
        if username is not None and not self.store.count(
                "User", [Criterion("UserName", OP_EQ, username)]):
            raise errors.UnresolvedReference(
                f"no such user: {username!r}", field="UserName")

    # -- visibility -----------------------------------------------------------

    def _requester_maps(self):
        users = {u["UserID"]: u for u in self.store.select("User").items}
        roles = {r["RoleID"]: r for r in self.store.select("Role").items}
        departments = {d["DepartmentID"]: d
                       for d in self.store.select("Department").items}
        faculties = {f["FacultyID"]: f
                     for f in self.store.select("Faculty").items}
        dept_ids: dict[int, set] = {}
        for m in self.store.select("Membership").items:
            dept_ids.setdefault(m["UserID"], set()).add(m["DepartmentID"])
        profiles = {}
        for user_id, user in users.items():
            depts = dept_ids.get(user_id, set())
            profiles[user_id] = {
                "user": user,
                "level": roles[user["RoleID"]]["Level"]
                if user["RoleID"] in roles else 0,
                "departments": depts,
                "department_names": {
                    departments[d]["DepartmentName"] for d in depts
                    if d in departments},
                "faculty_names": {
                    faculties[departments[d]["FacultyID"]]["FacultyName"]
                    for d in depts if d in departments},
            }
        return profiles

    def _scope_predicate(self, session: Session, profiles):
        level = directory.session_level(self.store, session)
        if level >= 3:
            return lambda row: True
        if level == 2:
            faculty = directory.session_faculty(self.store, session)
            faculty_name = faculty["FacultyName"] if faculty else None
            return lambda row: (
                (p := profiles.get(row["UserID"])) is not None
                and p["level"] <= 2 and faculty_name in p["faculty_names"])
        if level == 1:
            department_id = session.department_id
            return lambda row: (
                (p := profiles.get(row["UserID"])) is not None
                and p["level"] <= 1 and department_id in p["departments"])
        return lambda row: row["UserID"] == session.user_id

    def _view(self, row, profiles):
        requester = profiles.get(row["UserID"], {}).get("user", {})
        approver = {}
        if row.get("ApproverID"):
            approver = profiles.get(row["ApproverID"], {}).get("user", {})
        view = {k: v for k, v in row.items() if k != "_version"}
        view["Version"] = row["_version"]
        view["RequesterUserName"] = requester.get("UserName")
        view["RequesterName"] = directory.full_name(requester) \
            if requester else None
        view["ApproverUserName"] = approver.get("UserName")
        view["ApproverName"] = directory.full_name(approver) \
            if approver else None
        return view

    def search_requests(self, session: Session, statuses=None,
                        categories=None, originator_username=None,
                        originator_department=None, originator_faculty=None,
                        offset: int = 0, limit: int = 50):
        """Role-scoped listing. With no status picked the result is empty
        by design; category left open means every category."""
        statuses = list(statuses or [])
        for status in statuses:
            if status not in REQUEST_STATUSES:
                raise errors.ValidationFailed(
                    f"unknown status {status!r}", field="Status")
        known = GENERAL_CATEGORIES + SPECIFIC_CATEGORIES
        for category in categories or []:
            if category not in known:
                raise errors.BadCategory(f"unknown category {category!r}",
                                         field="Category")
        if not statuses:
            return [], 0
        profiles = self._requester_maps()
        in_scope = self._scope_predicate(session, profiles)
        rows = []
        for row in self.store.select("Request").items:
            if row["Status"] not in statuses:
                continue
            if categories and row["Category"] not in categories:
                continue
            if not in_scope(row):
                continue
            profile = profiles.get(row["UserID"])
            if originator_username is not None and (
                    profile is None or
                    profile["user"]["UserName"].lower()
                    != originator_username.lower()):
                continue
            if originator_department is not None and (
                    profile is None or
                    originator_department.lower() not in
                    {n.lower() for n in profile["department_names"]}):
                continue
            if originator_faculty is not None and (
                    profile is None or
                    originator_faculty.lower() not in
                    {n.lower() for n in profile["faculty_names"]}):
                continue
            rows.append(self._view(row, profiles))
        return rows[offset:offset + limit], len(rows)

    def get_request(self, session: Session, request_id: int) -> dict:
        row = self.store.get("Request", request_id)
        profiles = self._requester_maps()
        if row is None or not self._scope_predicate(session,
                                                    profiles)(row):
            raise errors.NotFound(f"no such request: {request_id}")
        return self._view(row, profiles)

    # -- transitions ----------------------------------------------------------

    def close_request(self, session: Session, request_id: int,
                      note: str) -> dict:
        """Close a general request with a mandatory note. Records the
        caller as the closer."""
        self.permissions.require(session, "request.close")
        for _ in range(_TRANSITION_ATTEMPTS):
            row = self._scoped_row(session, request_id)
            if row["Kind"] != "General":
                raise errors.NotGeneral(
                    "only general requests close this way; specific "
                    "requests are approved")
            if row["Status"] == "Closed":
                raise errors.AlreadyClosed(
                    f"request {request_id} is already closed")
            if not note:
                raise errors.EmptyNote("the closure note cannot be empty",
                                       field="ClosureNote")
            try:
                self.store.apply([Mutation.update(
                    "Request", request_id,
                    {"Status": "Closed",
                     "ClosureNote": note[:DESCRIPTION_CAP],
                     "ApproverID": session.user_id},
                    base_version=row["_version"])])
                return self.get_request(session, request_id)
            except errors.Conflict:
                continue
        raise errors.Conflict("the request is under heavy contention")

    def approve_request(self, session: Session, request_id: int) -> dict:
        """Approve a pending specific request. Records the decision only;
        the described change is applied separately through the inventory
        screens."""
        self.permissions.require(session, "request.approve")
        for _ in range(_TRANSITION_ATTEMPTS):
            row = self._scoped_row(session, request_id)
            if row["Kind"] != "Specific":
                raise errors.NotSpecific(
                    "only specific requests are approved; general "
                    "requests are closed")
            if row["Status"] != "Pending":
                raise errors.NotPending(
                    f"request {request_id} is {row['Status']}, "
                    "not pending")
            try:
                self.store.apply([Mutation.update(
                    "Request", request_id,
                    {"Status": "Approved", "ApproverID": session.user_id},
                    base_version=row["_version"])])
                return self.get_request(session, request_id)
            except errors.Conflict:
                continue
        raise errors.Conflict("the request is under heavy contention")

    def _scoped_row(self, session: Session, request_id: int) -> dict:
        row = self.store.get("Request", request_id)
        if row is None or not self._scope_predicate(
                session, self._requester_maps())(row):
            raise errors.NotFound(f"no such request: {request_id}")
        return row
