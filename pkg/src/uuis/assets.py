"""Physical asset inventory: assets, their category extensions, groups and
free-form additional parameters.

Every asset row pairs with one or two extension rows decided by its
Category (a Computer is also Equipment, a StorageUnit is also Furniture),
written in the same atomic batch as the base row.  Reads flatten base and
extension fields into one record, which is also what search queries run
against.

Visibility follows the caller's role level: 3 sees everything, 2 sees
assets owned by the caller's faculty, 1 the active department's assets,
and 0 only equipment assigned to the caller.  Rows outside scope are
indistinguishable from rows that do not exist.
"""
from __future__ import annotations

import re
from collections import Counter

from . import directory
from .errors import (
    BadCategory,
    CrossFaculty,
    DuplicateBarCode,
    EmptyGroup,
    ExtensionMismatch,
    FacultyMismatch,
    FieldTooLong,
    Forbidden,
    ImmutableField,
    InvalidAssetId,
    InvalidGroupId,
    InvalidLocationId,
    InvalidUserId,
    MissingMandatory,
    NotFound,
    UnknownDimension,
    UnknownField,
    ValidationFailed,
)
from .query import FieldCatalog, compile_query
from .schema import ASSET_CATEGORIES, ASSET_STATUSES, CATEGORY_EXTENSIONS
from .storage import Criterion, Mutation, OP_EQ, Ref

SEARCH_CATALOG = FieldCatalog({
    "AssetID": "int",
    "BarCode": "text",
    "Owner": "text",
    "LegacyCode": "text",
    "DatePurchased": "timestamp",
    "WarrantyExpiration": "timestamp",
    "Manufacturer": "text",
    "Model": "text",
    "Category": "text",
    "Status": "text",
    "PoNumber": "text",
    "PRequest": "text",
    "LocationID": "int",
    "DepartmentID": "int",
    "GroupID": "int",
    "Location": "text",
    "Group": "text",
    "Type": "text",
    "FurnitureType": "text",
    "EquipmentType": "text",
    "Dimension": "text",
    "Color": "text",
    "Finish": "text",
    "NumberOfCompartment": "int",
    "SerialNo": "text",
    "UserID": "int",
    "Processor": "text",
    "MACAddress": "text",
    "HardDriveCap": "text",
    "ROM": "text",
    "RAM": "text",
})

MANDATORY_DRAFT_FIELDS = ("BarCode", "Owner", "Category", "LocationID",
                          "DepartmentID")

BASE_DRAFT_KEYS = frozenset({
    "LocationID", "DepartmentID", "GroupID", "BarCode", "Owner",
    "LegacyCode", "DatePurchased", "WarrantyExpiration", "Manufacturer",
    "Model", "Category", "Status", "PoNumber", "PRequest",
})

# draft keys per category; dimensions travel as three integers
_DIMENSION_KEYS = ("Height", "Width", "Depth")
_FURNITURE_KEYS = {"Type", "Height", "Width", "Depth", "Color", "Finish"}
EXT_DRAFT_KEYS: dict[str, frozenset] = {
    "Furniture": frozenset(_FURNITURE_KEYS),
    "StorageUnit": frozenset({"FurnitureType", "NumberOfCompartment"}
                             | _FURNITURE_KEYS),
    "Equipment": frozenset({"Type", "UserID", "SerialNo"}),
    "Computer": frozenset({"EquipmentType", "UserID", "SerialNo", "Type",
                           "Processor", "MACAddress", "HardDriveCap", "ROM",
                           "RAM"}),
}
ALL_EXT_KEYS = frozenset().union(*EXT_DRAFT_KEYS.values())

# set once at intake, never edited afterwards
IMMUTABLE_FIELDS = frozenset({
    "AssetID", "BarCode", "PRequest", "PoNumber", "Manufacturer", "Model",
    "Category", "Type", "FurnitureType", "EquipmentType", "SerialNo",
})

_MAC_RE = re.compile(r"^[0-9A-Fa-f]{2}(:[0-9A-Fa-f]{2}){5}$")
_TS_RE = re.compile(r"^\d{4}-\d{2}-\d{2}(T\d{2}:\d{2}:\d{2}Z)?$")

REPORT_DIMENSIONS = ("Category", "Status", "Owner", "LocationID")


def _dimension_string(height, width, depth) -> str:
    return f"{height}x{width}x{depth}"


def _parse_dimension(text):
    try:
        height, width, depth = (int(p) for p in text.split("x"))
        return height, width, depth
    except (AttributeError, ValueError):
        return None


class AssetService:
    def __init__(self, store, permissions):
        self.store = store
        self.permissions = permissions

    # -- visibility -----------------------------------------------------------

    def _caller_context(self, session):
        level = directory.session_level(self.store, session)
        faculty = directory.session_faculty(self.store, session)
        return level, (faculty["FacultyName"] if faculty else None)

    def _in_scope(self, session, level, faculty_name, record) -> bool:
        if level >= 3:
            return True
        if level == 2:
            return faculty_name is not None and \
                record["Owner"] == faculty_name
        if level == 1:
            return record["DepartmentID"] == session.department_id
        return record.get("UserID") == session.user_id

    def _flat_record(self, asset, names=None) -> dict:
        record = {k: v for k, v in asset.items() if k != "_version"}
        record["Version"] = asset["_version"]
        for ext_kind in CATEGORY_EXTENSIONS.get(asset["Category"], ()):
            ext = self.store.get(ext_kind, asset["AssetID"])
            if ext is None:
                continue
            for key, value in ext.items():
                if key in ("AssetID", "_version"):
                    continue
                if ext_kind == "Furniture" and asset["Category"] == \
                        "StorageUnit" and key == "Type":
                    record["FurnitureType"] = value
                elif ext_kind == "Equipment" and asset["Category"] == \
                        "Computer" and key == "Type":
                    record["EquipmentType"] = value
                else:
                    record[key] = value
        dimension = record.get("Dimension")
        parsed = _parse_dimension(dimension) if dimension else None
        if parsed:
            record["Height"], record["Width"], record["Depth"] = parsed
        if names is None:
            names = {}
        location = names.get(("Location", asset["LocationID"]))
        if location is None:
            location = self.store.get("Location", asset["LocationID"])
        record["Location"] = location["LocationName"] if location else None
        group_name = None
        if asset.get("GroupID") is not None:
            group = names.get(("Group", asset["GroupID"]))
            if group is None:
                group = self.store.get("Group", asset["GroupID"])
            group_name = group["GroupName"] if group else None
        record["Group"] = group_name
        return record

    def _visible_records(self, session) -> list[dict]:
        level, faculty_name = self._caller_context(session)
        names = {}
        for loc in self.store.select("Location").items:
            names[("Location", loc["LocationID"])] = loc
        for group in self.store.select("Group").items:
            names[("Group", group["GroupID"])] = group
        records = []
        for asset in self.store.select("PhysicalAsset").items:
            record = self._flat_record(asset, names)
            if self._in_scope(session, level, faculty_name, record):
                records.append(record)
        return records

    # -- search and read ------------------------------------------------------

    def search_assets(self, session, query=None, offset=0, limit=50):
        """Visible assets, optionally filtered by a parsed query tree."""
        self.permissions.require(session, "asset.search")
        records = self._visible_records(session)
        if query is not None:
            compiled = compile_query(query, SEARCH_CATALOG)
            records = [r for r in records if compiled.matches(r)]
        total = len(records)
        return records[offset:offset + limit], total

    def get_asset(self, session, asset_id: int) -> dict:
        self.permissions.require(session, "asset.search")
        asset = self.store.get("PhysicalAsset", asset_id)
        if asset is None:
            raise NotFound(f"asset {asset_id} not found")
        record = self._flat_record(asset)
        level, faculty_name = self._caller_context(session)
        if not self._in_scope(session, level, faculty_name, record):
            raise NotFound(f"asset {asset_id} not found")
        record["Parameters"] = [
            {"ParameterName": p["ParameterName"], "Value": p["Value"]}
            for p in self.store.select(
                "AdditionalParameter",
                [Criterion("AssetID", OP_EQ, asset_id)],
                order_by="ParameterName").items]
        return record

    # -- intake ---------------------------------------------------------------

    def add_asset(self, session, draft: dict) -> int:
        self.permissions.require(session, "asset.add")
        missing = [name for name in MANDATORY_DRAFT_FIELDS
                   if not draft.get(name)]
        if missing:
            raise MissingMandatory(
                f"mandatory fields missing: {', '.join(missing)}",
                field=missing[0])
        category = draft["Category"]
        if category not in ASSET_CATEGORIES:
            raise BadCategory(f"unknown asset category {category!r}",
                              field="Category")
        if category == "Furniture" and not draft.get("Type"):
            raise MissingMandatory("mandatory fields missing: Type",
                                   field="Type")
        allowed_ext = EXT_DRAFT_KEYS[category]
        for key in draft:
            if key in BASE_DRAFT_KEYS:
                continue
            if key in ALL_EXT_KEYS:
                if key not in allowed_ext:
                    raise ExtensionMismatch(
                        f"{key} does not belong on a {category}", field=key)
                continue
            raise UnknownField(f"{key!r} is not an asset field", field=key)

        level, faculty_name = self._caller_context(session)
        if level == 2 and draft["Owner"] != faculty_name:
            raise FacultyMismatch(
                "designated faculty users record assets for their own "
                "faculty", field="Owner")

        self._check_references(draft)
        self._check_barcode(draft["BarCode"], exclude_id=None)
        self._check_formats(draft)

        base_values = {k: draft[k] for k in BASE_DRAFT_KEYS if k in draft}
        batch = [Mutation.insert("PhysicalAsset", **base_values)]
        for ext_kind in CATEGORY_EXTENSIONS[category]:
            batch.append(Mutation.insert(
                ext_kind, AssetID=Ref(0),
                **self._ext_values(ext_kind, category, draft)))
        return self.store.apply(batch)[0]

    def _ext_values(self, ext_kind: str, category: str, draft: dict) -> dict:
        values = {}
        if ext_kind == "Furniture":
            type_key = "FurnitureType" if category == "StorageUnit" \
                else "Type"
            if type_key in draft:
                values["Type"] = draft[type_key]
            heights = [draft.get(k) for k in _DIMENSION_KEYS]
            if any(v is not None for v in heights):
                if not all(isinstance(v, int) and not isinstance(v, bool)
                           and v >= 0 for v in heights):
                    raise ValidationFailed(
                        "Height, Width and Depth travel together as "
                        "non-negative integers", field="Dimension")
                values["Dimension"] = _dimension_string(*heights)
            for key in ("Color", "Finish"):
                if key in draft:
                    values[key] = draft[key]
        elif ext_kind == "StorageUnit":
            if "Type" in draft:
                values["Type"] = draft["Type"]
            if "NumberOfCompartment" in draft:
                count = draft["NumberOfCompartment"]
                if not isinstance(count, int) or isinstance(count, bool) \
                        or count < 1:
                    raise ValidationFailed(
                        "NumberOfCompartment is an integer of at least 1",
                        field="NumberOfCompartment")
                values["NumberOfCompartment"] = count
        elif ext_kind == "Equipment":
            type_key = "EquipmentType" if category == "Computer" else "Type"
            if type_key in draft:
                values["Type"] = draft[type_key]
            for key in ("UserID", "SerialNo"):
                if key in draft:
                    values[key] = draft[key]
        elif ext_kind == "Computer":
            for key in ("Type", "Processor", "MACAddress", "HardDriveCap",
                        "ROM", "RAM"):
                if key in draft:
                    values[key] = draft[key]
        return values

    def _check_references(self, values: dict) -> None:
        if "LocationID" in values and values["LocationID"] is not None:
            if self.store.get("Location", values["LocationID"]) is None:
                raise InvalidLocationId(
                    f"location {values['LocationID']} does not exist",
                    field="LocationID")
        if "DepartmentID" in values and values["DepartmentID"] is not None:
            if self.store.get("Department", values["DepartmentID"]) is None:
                raise ValidationFailed(
                    f"department {values['DepartmentID']} does not exist",
                    field="DepartmentID")
        if values.get("GroupID") is not None:
            if self.store.get("Group", values["GroupID"]) is None:
                raise InvalidGroupId(
                    f"group {values['GroupID']} does not exist",
                    field="GroupID")
        if values.get("UserID") is not None:
            if self.store.get("User", values["UserID"]) is None:
                raise InvalidUserId(
                    f"user {values['UserID']} does not exist",
                    field="UserID")

    def _check_barcode(self, barcode: str, exclude_id: int | None) -> None:
        rows = self.store.select("PhysicalAsset", [
            Criterion("BarCode", OP_EQ, barcode)]).items
        if any(r["AssetID"] != exclude_id for r in rows):
            raise DuplicateBarCode(f"bar code {barcode!r} is already taken",
                                   field="BarCode")

    def _check_formats(self, values: dict) -> None:
        mac = values.get("MACAddress")
        if mac is not None and not _MAC_RE.match(mac):
            raise ValidationFailed(
                "MACAddress reads as six colon-separated hex pairs",
                field="MACAddress")
        for key in ("DatePurchased", "WarrantyExpiration"):
            value = values.get(key)
            if value is not None and not _TS_RE.match(value):
                raise ValidationFailed(
                    f"{key} reads as YYYY-MM-DD or an ISO UTC timestamp",
                    field=key)
        status = values.get("Status")
        if status is not None and status not in ASSET_STATUSES:
            raise ValidationFailed(
                f"Status is one of {', '.join(ASSET_STATUSES)}",
                field="Status")

    # -- edits ----------------------------------------------------------------

    def update_asset(self, session, asset_id: int, changes: dict,
                     base_version: int | None = None) -> dict:
        self.permissions.require(session, "asset.update")
        asset = self.store.get("PhysicalAsset", asset_id)
        if asset is None:
            raise NotFound(f"asset {asset_id} not found")
        record = self._flat_record(asset)
        level, faculty_name = self._caller_context(session)
        if not self._in_scope(session, level, faculty_name, record):
            raise NotFound(f"asset {asset_id} not found")

        category = asset["Category"]
        allowed_ext = EXT_DRAFT_KEYS[category]
        for key in changes:
            if key in IMMUTABLE_FIELDS:
                raise ImmutableField(f"{key} is fixed at intake", field=key)
            if key in BASE_DRAFT_KEYS:
                continue
            if key in ALL_EXT_KEYS:
                if key not in allowed_ext:
                    raise ExtensionMismatch(
                        f"{key} does not belong on a {category}", field=key)
                continue
            raise UnknownField(f"{key!r} is not an asset field", field=key)
        if "Owner" in changes and level < 3:
            raise Forbidden("only university administrators reassign the "
                            "owning faculty")

        self._check_references(changes)
        self._check_formats(changes)

        base_changes = {k: v for k, v in changes.items()
                        if k in BASE_DRAFT_KEYS}
        batch = []
        if base_changes:
            batch.append(Mutation.update("PhysicalAsset", asset_id,
                                         base_changes,
                                         base_version=base_version))
        for ext_kind in CATEGORY_EXTENSIONS[category]:
            ext_changes = self._ext_update_values(ext_kind, category,
                                                  changes, asset_id)
            if ext_changes:
                batch.append(Mutation.update(ext_kind, asset_id,
                                             ext_changes))
        if batch:
            self.store.apply(batch)
        return self.get_asset(session, asset_id)

    def _ext_update_values(self, ext_kind: str, category: str,
                           changes: dict, asset_id: int) -> dict:
        values = {}
        if ext_kind == "Furniture":
            touched = [k for k in _DIMENSION_KEYS if k in changes]
            if touched:
                current = self.store.get("Furniture", asset_id) or {}
                parsed = _parse_dimension(current.get("Dimension")) \
                    or (None, None, None)
                merged = {k: changes.get(k, parsed[i])
                          for i, k in enumerate(_DIMENSION_KEYS)}
                dims = [merged[k] for k in _DIMENSION_KEYS]
                if not all(isinstance(v, int) and not isinstance(v, bool)
                           and v >= 0 for v in dims):
                    raise ValidationFailed(
                        "Height, Width and Depth travel together as "
                        "non-negative integers", field="Dimension")
                values["Dimension"] = _dimension_string(*dims)
            for key in ("Color", "Finish"):
                if key in changes:
                    values[key] = changes[key]
        elif ext_kind == "StorageUnit":
            if "NumberOfCompartment" in changes:
                count = changes["NumberOfCompartment"]
                if not isinstance(count, int) or isinstance(count, bool) \
                        or count < 1:
                    raise ValidationFailed(
                        "NumberOfCompartment is an integer of at least 1",
                        field="NumberOfCompartment")
                values["NumberOfCompartment"] = count
        elif ext_kind == "Equipment":
            if "UserID" in changes:
                values["UserID"] = changes["UserID"]
        elif ext_kind == "Computer":
            for key in ("Processor", "MACAddress", "HardDriveCap", "ROM",
                        "RAM"):
                if key in changes:
                    values[key] = changes[key]
        return values

    def set_parameter(self, session, asset_id: int, name: str,
                      value: str | None) -> None:
        """Create or overwrite one additional parameter on an asset."""
        self.permissions.require(session, "asset.update")
        asset = self.store.get("PhysicalAsset", asset_id)
        if asset is None:
            raise NotFound(f"asset {asset_id} not found")
        record = self._flat_record(asset)
        level, faculty_name = self._caller_context(session)
        if not self._in_scope(session, level, faculty_name, record):
            raise NotFound(f"asset {asset_id} not found")
        if not name:
            raise MissingMandatory("the parameter needs a name",
                                   field="ParameterName")
        if len(name) > 128:
            raise FieldTooLong("parameter names are capped at 128",
                               field="ParameterName")
        if value is not None and len(value) > 64:
            raise FieldTooLong("parameter values are capped at 64",
                               field="Value")
        existing = self.store.select("AdditionalParameter", [
            Criterion("AssetID", OP_EQ, asset_id),
            Criterion("ParameterName", OP_EQ, name)]).items
        if existing:
            self.store.apply([Mutation.update(
                "AdditionalParameter", existing[0]["ParameterID"],
                {"Value": value})])
        else:
            self.store.apply([Mutation.insert(
                "AdditionalParameter", AssetID=asset_id, ParameterName=name,
                Value=value)])

    # -- groups ---------------------------------------------------------------

    def create_group(self, session, draft: dict) -> int:
        self.permissions.require(session, "group.create")
        member_ids = draft.get("MemberAssetIDs") or []
        if not member_ids:
            raise EmptyGroup("a group holds at least one asset",
                             field="MemberAssetIDs")
        members = self._resolve_members(member_ids)
        level, faculty_name = self._caller_context(session)
        if level == 2:
            for asset in members:
                if asset["Owner"] != faculty_name:
                    raise CrossFaculty(
                        f"asset {asset['AssetID']} belongs to another "
                        "faculty")
        location_id = draft.get("LocationID")
        if location_id is None or \
                self.store.get("Location", location_id) is None:
            raise InvalidLocationId(f"location {location_id} does not exist",
                                    field="LocationID")
        user_id = draft.get("UserID", session.user_id)
        if self.store.get("User", user_id) is None:
            raise InvalidUserId(f"user {user_id} does not exist",
                                field="UserID")
        batch = [Mutation.insert(
            "Group", UserID=user_id, LocationID=location_id,
            GroupName=draft.get("GroupName"), Status="active")]
        for asset in members:
            batch.append(Mutation.update("PhysicalAsset", asset["AssetID"],
                                         {"GroupID": Ref(0)}))
        batch.extend(self._deactivation_fixups(
            {a["AssetID"] for a in members}, moving_to=None))
        return self.store.apply(batch)[0]

    def update_group(self, session, group_id: int, changes: dict) -> dict:
        self.permissions.require(session, "group.edit")
        self._active_group(group_id)
        batch = []
        row_changes = {}
        if "GroupName" in changes:
            row_changes["GroupName"] = changes["GroupName"]
        if "LocationID" in changes:
            if self.store.get("Location", changes["LocationID"]) is None:
                raise InvalidLocationId(
                    f"location {changes['LocationID']} does not exist",
                    field="LocationID")
            row_changes["LocationID"] = changes["LocationID"]
        if "UserID" in changes:
            if self.store.get("User", changes["UserID"]) is None:
                raise InvalidUserId(
                    f"user {changes['UserID']} does not exist",
                    field="UserID")
            row_changes["UserID"] = changes["UserID"]
        unknown = set(changes) - {"GroupName", "LocationID", "UserID",
                                  "MemberAssetIDs"}
        if unknown:
            raise UnknownField(f"{sorted(unknown)[0]!r} is not a group "
                               "field", field=sorted(unknown)[0])
        if row_changes:
            batch.append(Mutation.update("Group", group_id, row_changes))
        if "MemberAssetIDs" in changes:
            member_ids = changes["MemberAssetIDs"] or []
            if not member_ids:
                raise EmptyGroup("a group holds at least one asset",
                                 field="MemberAssetIDs")
            members = self._resolve_members(member_ids)
            level, faculty_name = self._caller_context(session)
            if level == 2:
                for asset in members:
                    if asset["Owner"] != faculty_name:
                        raise CrossFaculty(
                            f"asset {asset['AssetID']} belongs to another "
                            "faculty")
            wanted = {a["AssetID"] for a in members}
            current = {a["AssetID"] for a in self.store.select(
                "PhysicalAsset",
                [Criterion("GroupID", OP_EQ, group_id)]).items}
            for asset_id in sorted(current - wanted):
                batch.append(Mutation.update("PhysicalAsset", asset_id,
                                             {"GroupID": None}))
            for asset_id in sorted(wanted - current):
                batch.append(Mutation.update("PhysicalAsset", asset_id,
                                             {"GroupID": group_id}))
            batch.extend(self._deactivation_fixups(wanted - current,
                                                   moving_to=group_id))
        if batch:
            self.store.apply(batch)
        return self.get_group(session, group_id)

    def delete_group(self, session, group_id: int) -> None:
        """Retire a group: mark it inactive and detach its members."""
        self.permissions.require(session, "group.edit")
        self._active_group(group_id)
        batch = [Mutation.update("Group", group_id, {"Status": "inactive"})]
        for asset in self.store.select(
                "PhysicalAsset",
                [Criterion("GroupID", OP_EQ, group_id)]).items:
            batch.append(Mutation.update("PhysicalAsset", asset["AssetID"],
                                         {"GroupID": None}))
        self.store.apply(batch)

    def get_group(self, session, group_id: int) -> dict:
        self.permissions.require(session, "asset.search")
        group = self.store.get("Group", group_id)
        if group is None:
            raise InvalidGroupId(f"group {group_id} does not exist",
                                 field="GroupID")
        members = self.store.select(
            "PhysicalAsset", [Criterion("GroupID", OP_EQ, group_id)]).items
        location = self.store.get("Location", group["LocationID"])
        owner = self.store.get("User", group["UserID"])
        return {
            "GroupID": group["GroupID"],
            "GroupName": group.get("GroupName"),
            "Status": group["Status"],
            "LocationID": group["LocationID"],
            "Location": location["LocationName"] if location else None,
            "UserID": group["UserID"],
            "UserName": owner["UserName"] if owner else None,
            "Members": [{"AssetID": a["AssetID"], "BarCode": a["BarCode"]}
                        for a in sorted(members,
                                        key=lambda a: a["AssetID"])],
        }

    def list_groups(self, session, offset=0, limit=50):
        """Active groups only; a deactivated group stays readable by id."""
        self.permissions.require(session, "asset.search")
        groups = self.store.select(
            "Group", [Criterion("Status", OP_EQ, "active")],
            order_by="GroupID").items
        records = [self.get_group(session, g["GroupID"]) for g in groups]
        return records[offset:offset + limit], len(records)

    def _active_group(self, group_id: int) -> dict:
        group = self.store.get("Group", group_id)
        if group is None or group["Status"] != "active":
            raise InvalidGroupId(f"group {group_id} is not an active group",
                                 field="GroupID")
        return group

    def _resolve_members(self, member_ids) -> list[dict]:
        members = []
        for position, asset_id in enumerate(member_ids, start=1):
            asset = self.store.get("PhysicalAsset", asset_id) \
                if isinstance(asset_id, int) else None
            if asset is None:
                raise InvalidAssetId(
                    f"asset #{position} has an invalid asset id",
                    position=position)
            members.append(asset)
        return members

    def _deactivation_fixups(self, taken_ids: set, moving_to) -> list:
        """Groups that lose their last member to a move become inactive."""
        batch = []
        losses = Counter()
        for asset_id in taken_ids:
            asset = self.store.get("PhysicalAsset", asset_id)
            if asset and asset.get("GroupID") is not None:
                losses[asset["GroupID"]] += 1
        for group_id, lost in losses.items():
            if group_id == moving_to:
                continue
            group = self.store.get("Group", group_id)
            if group is None or group["Status"] != "active":
                continue
            size = self.store.count("PhysicalAsset", [
                Criterion("GroupID", OP_EQ, group_id)])
            if size - lost <= 0:
                batch.append(Mutation.update("Group", group_id,
                                             {"Status": "inactive"}))
        return batch

    # -- reporting ------------------------------------------------------------

    def asset_report(self, session, group_by: str) -> list[tuple[str, int]]:
        """Visible asset counts grouped along one dimension."""
        self.permissions.require(session, "asset.search")
        if group_by not in REPORT_DIMENSIONS:
            raise UnknownDimension(
                f"reports group by one of {', '.join(REPORT_DIMENSIONS)}",
                field="group_by")
        counts = Counter()
        for record in self._visible_records(session):
            key = record.get(group_by)
            counts[key if key is not None else "(none)"] += 1
        return sorted(counts.items())
