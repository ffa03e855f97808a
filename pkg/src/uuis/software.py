"""Software titles and their licenses: seat accounting for user
assignments and computer installations, plus the expiry watch.

Seats are never stored as a remaining counter.  The remaining figure is
always derived as SeatCount minus the number of assignment and
installation rows, so it cannot drift.  Consuming a seat re-checks the
count under a version guard on the license row; two racing consumers of
the last seat leave exactly one of them with NoSeatsRemaining.
"""
from __future__ import annotations

from datetime import date

from . import errors
from .auth import Session
from .clock import day_of
from .permissions import PermissionService
from .storage import Criterion, Mutation, OP_EQ
from .storage.gateway import MemoryStore

TITLE_DRAFT_KEYS = ("Name", "VendorID", "VendorName", "Category",
                    "Version", "Media")
LICENSE_DRAFT_KEYS = ("DepartmentID", "UserID", "Key", "DatePurchased",
                      "PoNumber", "Type", "ExpirationDate", "SeatCount")
LICENSE_MANDATORY = ("DepartmentID", "UserID", "Key", "DatePurchased",
                     "Type", "ExpirationDate", "SeatCount")

_CONSUME_ATTEMPTS = 16


class SoftwareService:
    def __init__(self, store: MemoryStore, permissions: PermissionService):
        self.store = store
        self.permissions = permissions

    # -- titles ---------------------------------------------------------------

    def add_software(self, session: Session, draft: dict) -> int:
        self.permissions.require(session, "software.add")
        for key in draft:
            if key not in TITLE_DRAFT_KEYS:
                raise errors.UnknownField(
                    f"{key!r} is not a software field", field=key)
        for key in ("Name", "Version"):
            if not draft.get(key):
                raise errors.MissingMandatory(f"{key} is mandatory",
                                              field=key)
        self._check_title_unique(draft["Name"], draft["Version"],
                                 exclude_id=None)
        return self.store.apply([Mutation.insert("Software", **draft)])[0]

    def edit_software(self, session: Session, software_id: int,
                      changes: dict, base_version: int = None) -> dict:
        self.permissions.require(session, "software.edit")
        title = self.store.get("Software", software_id)
        if title is None:
            raise errors.NotFound(f"no such software: {software_id}")
        if "SoftwareID" in changes:
            raise errors.ImmutableField("SoftwareID is fixed",
                                        field="SoftwareID")
        for key in changes:
            if key not in TITLE_DRAFT_KEYS:
                raise errors.UnknownField(
                    f"{key!r} is not a software field", field=key)
        for key in ("Name", "Version"):
            if key in changes and not changes[key]:
                raise errors.MissingMandatory(f"{key} is mandatory",
                                              field=key)
        name = changes.get("Name", title["Name"])
        version = changes.get("Version", title["Version"])
        self._check_title_unique(name, version, exclude_id=software_id)
        if changes:
            self.store.apply([Mutation.update("Software", software_id,
                                              changes,
                                              base_version=base_version)])
        return self.get_software(session, software_id)

    def _check_title_unique(self, name, version, exclude_id):
        rows = self.store.select("Software", [
            Criterion("Name", OP_EQ, name),
            Criterion("Version", OP_EQ, version)]).items
        if any(r["SoftwareID"] != exclude_id for r in rows):
            raise errors.Duplicate(
                f"{name} {version} is already on file", field="Name")

    def search_software(self, session: Session, filters: dict = None,
                        offset: int = 0, limit: int = 50):
        """Case-insensitive substring match per given field."""
        needles = {}
        for key, value in (filters or {}).items():
            canonical = next((k for k in TITLE_DRAFT_KEYS
                              if k.lower() == key.lower()), None)
            if canonical is None:
                raise errors.UnknownField(
                    f"{key!r} is not a software field", field=key)
            if value not in (None, ""):
                needles[canonical] = str(value).lower()
        rows = []
        for title in self.store.select("Software").items:
            if all(needle in str(title.get(field) or "").lower()
                   for field, needle in needles.items()):
                title.pop("_version", None)
                title["LicenseCount"] = self.store.count("License", [
                    Criterion("SoftwareID", OP_EQ, title["SoftwareID"])])
                rows.append(title)
        return rows[offset:offset + limit], len(rows)

    def get_software(self, session: Session, software_id: int) -> dict:
        title = self.store.get("Software", software_id)
        if title is None:
            raise errors.NotFound(f"no such software: {software_id}")
        # Version is the software's own version string; the row counter
        # travels separately as RecordVersion.
        detail = {k: v for k, v in title.items() if k != "_version"}
        detail["RecordVersion"] = title["_version"]
        detail["Licenses"] = [
            self._license_view(row) for row in self.store.select(
                "License",
                [Criterion("SoftwareID", OP_EQ, software_id)]).items]
        return detail

    def _license_view(self, row: dict) -> dict:
        assignments = self.store.count("SeatAssignment", [
            Criterion("LicenseID", OP_EQ, row["LicenseID"])])
        installations = self.store.count("Installation", [
            Criterion("LicenseID", OP_EQ, row["LicenseID"])])
        department = self.store.get("Department", row["DepartmentID"])
        faculty = None
        if department:
            faculty = self.store.get("Faculty", department["FacultyID"])
        view = {k: v for k, v in row.items() if k != "_version"}
        view["Assignments"] = assignments
        view["Installations"] = installations
        view["Remaining"] = row["SeatCount"] - assignments - installations
        view["DepartmentName"] = \
            department["DepartmentName"] if department else None
        view["FacultyName"] = faculty["FacultyName"] if faculty else None
        return view

    def get_license(self, session: Session, license_id: int) -> dict:
        row = self.store.get("License", license_id)
        if row is None:
            raise errors.NotFound(f"no such license: {license_id}")
        view = self._license_view(row)
        title = self.store.get("Software", row["SoftwareID"])
        view["SoftwareName"] = title["Name"] if title else None
        view["SoftwareVersion"] = title["Version"] if title else None
        return view

    # -- licenses -------------------------------------------------------------

    def add_license(self, session: Session, software_id: int,
                    draft: dict) -> int:
        self.permissions.require(session, "software.add")
        if self.store.get("Software", software_id) is None:
            raise errors.NotFound(f"no such software: {software_id}")
        for key in draft:
            if key not in LICENSE_DRAFT_KEYS:
                raise errors.UnknownField(
                    f"{key!r} is not a license field", field=key)
        for key in LICENSE_MANDATORY:
            if draft.get(key) in (None, ""):
                raise errors.MissingMandatory(f"{key} is mandatory",
                                              field=key)
        purchased = self._day(draft["DatePurchased"], "DatePurchased")
        expires = self._day(draft["ExpirationDate"], "ExpirationDate")
        if expires < purchased:
            raise errors.DateOrder(
                "ExpirationDate precedes DatePurchased",
                field="ExpirationDate")
        seats = draft["SeatCount"]
        if not isinstance(seats, int) or isinstance(seats, bool) \
                or seats < 1:
            raise errors.ValidationFailed(
                "SeatCount is an integer of at least 1", field="SeatCount")
        if self.store.get("Department", draft["DepartmentID"]) is None:
            raise errors.ValidationFailed(
                f"no such department: {draft['DepartmentID']}",
                field="DepartmentID")
        if self.store.get("User", draft["UserID"]) is None:
            raise errors.ValidationFailed(
                f"no such user: {draft['UserID']}", field="UserID")
        return self.store.apply([Mutation.insert(
            "License", SoftwareID=software_id, **draft)])[0]

    @staticmethod
    def _day(value, field):
        try:
            return day_of(value)
        except (TypeError, ValueError):
            raise errors.ValidationFailed(
                f"{field} reads as YYYY-MM-DD or an ISO UTC timestamp",
                field=field)

    def assign_license(self, session: Session, license_id: int,
                       user_id: int) -> dict:
        self.permissions.require(session, "license.assign")
        if self.store.get("User", user_id) is None:
            raise errors.NotFound(f"no such user: {user_id}")
        self._consume_seat(
            license_id,
            lambda: self._assign_guard(license_id, user_id),
            Mutation.insert("SeatAssignment", LicenseID=license_id,
                            UserID=user_id))
        return self.get_license(session, license_id)

    def install_license(self, session: Session, license_id: int,
                        asset_id: int) -> dict:
        self.permissions.require(session, "license.assign")
        asset = self.store.get("PhysicalAsset", asset_id)
        if asset is None:
            raise errors.NotFound(f"no such asset: {asset_id}")
        if asset["Category"] != "Computer":
            raise errors.NotAComputer(
                f"asset {asset_id} is a {asset['Category']}, software "
                "installs on computers only")
        self._consume_seat(
            license_id,
            lambda: self._install_guard(license_id, asset_id),
            Mutation.insert("Installation", LicenseID=license_id,
                            AssetID=asset_id))
        return self.get_license(session, license_id)

    def _assign_guard(self, license_id, user_id):
        if self.store.count("SeatAssignment", [
                Criterion("LicenseID", OP_EQ, license_id),
                Criterion("UserID", OP_EQ, user_id)]):
            raise errors.AlreadyAssigned(
                f"user {user_id} already holds a seat")

    def _install_guard(self, license_id, asset_id):
        if self.store.count("Installation", [
                Criterion("LicenseID", OP_EQ, license_id),
                Criterion("AssetID", OP_EQ, asset_id)]):
            raise errors.AlreadyInstalled(
                f"asset {asset_id} already carries this license")

    def _consume_seat(self, license_id, guard, insert):
        """Insert a consumption row while holding a version guard on the
        license, so the remaining count can never go below zero."""
        for _ in range(_CONSUME_ATTEMPTS):
            row = self.store.get("License", license_id)
            if row is None:
                raise errors.NotFound(f"no such license: {license_id}")
            guard()
            consumed = self.store.count("SeatAssignment", [
                Criterion("LicenseID", OP_EQ, license_id)])
            consumed += self.store.count("Installation", [
                Criterion("LicenseID", OP_EQ, license_id)])
            if row["SeatCount"] - consumed < 1:
                raise errors.NoSeatsRemaining(
                    "all %d seats are in use" % row["SeatCount"])
            try:
                self.store.apply([
                    Mutation.update("License", license_id,
                                    {"SeatCount": row["SeatCount"]},
                                    base_version=row["_version"]),
                    insert])
                return
            except errors.Conflict:
                continue
        raise errors.Conflict("the license is under heavy contention")

    # -- expiry watch ---------------------------------------------------------

    def licenses_near_expiry(self, session: Session, window_days: int,
                             as_of) -> dict:
        """Licenses expiring within the window, plus the already expired.

        A pure read over (store, window_days, as_of): repeated calls give
        identical answers.
        """
        self.permissions.require(session, "software.edit")
        if not isinstance(window_days, int) or isinstance(window_days, bool)\
                or window_days < 0:
            raise errors.ValidationFailed(
                "window_days is a non-negative integer",
                field="window_days")
        if isinstance(as_of, str):
            as_of = self._day(as_of, "as_of")
        elif not isinstance(as_of, date):
            raise errors.ValidationFailed(
                "as_of is a date or YYYY-MM-DD text", field="as_of")
        titles = {t["SoftwareID"]: t
                  for t in self.store.select("Software").items}
        expiring = []
        expired = []
        for row in self.store.select("License").items:
            days = (day_of(row["ExpirationDate"]) - as_of).days
            title = titles.get(row["SoftwareID"], {})
            entry = {
                "LicenseID": row["LicenseID"],
                "SoftwareID": row["SoftwareID"],
                "SoftwareName": title.get("Name"),
                "SoftwareVersion": title.get("Version"),
                "ExpirationDate": row["ExpirationDate"],
                "DaysRemaining": days,
            }
            if days < 0:
                expired.append(entry)
            elif days <= window_days:
                expiring.append(entry)
        key = lambda e: (e["DaysRemaining"], e["LicenseID"])
        return {"expiring": sorted(expiring, key=key),
                "expired": sorted(expired, key=key)}
