"""Entity schema registry.

One ``Entity`` per stored record kind.  The persistence gateway validates
every read and write against this registry: field names, NOT NULL columns,
insert defaults, foreign keys and unique constraints all live here, so the
two storage backends cannot drift apart on what a well-formed row is.

Subtype tables (asset extensions, location profiles) share their primary key
with the base row instead of minting their own, so those entities are marked
``pk_auto=False`` and their pk column doubles as a foreign key.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

INT = "int"
TEXT = "text"
BOOL = "bool"
TS = "timestamp"


@dataclass(frozen=True)
class Field:
    name: str
    kind: str = TEXT
    max_len: int | None = None
    required: bool = False
    default: object = None
    fk: str | None = None


@dataclass(frozen=True)
class Entity:
    kind: str
    pk: str
    fields: tuple[Field, ...]
    unique: tuple[tuple[str, ...], ...] = ()
    pk_auto: bool = True

    def field_map(self) -> dict[str, Field]:
        return {f.name: f for f in self.fields}


def _e(kind, pk, fields, unique=(), pk_auto=True):
    return Entity(kind=kind, pk=pk, fields=tuple(fields), unique=tuple(unique),
                  pk_auto=pk_auto)


ENTITIES: dict[str, Entity] = {}


def register(entity: Entity) -> Entity:
    ENTITIES[entity.kind] = entity
    return entity


def entity(kind: str) -> Entity:
    return ENTITIES[kind]


# ---------------------------------------------------------------------------
# people, roles, sessions

register(_e("Role", "RoleID", [
    Field("RoleID", INT),
    Field("RoleName", TEXT, 32),
    Field("Level", INT, required=True),
]))

register(_e("User", "UserID", [
    Field("UserID", INT),
    Field("RoleID", INT, required=True, fk="Role"),
    Field("UserName", TEXT, 32, required=True),
    Field("PasswordDigest", TEXT, required=True),
    Field("FirstName", TEXT, 64),
    Field("LastName", TEXT, 64),
    Field("Email", TEXT, 64),
], unique=[("UserName",)]))

register(_e("Permission", "PermissionID", [
    Field("PermissionID", INT),
    Field("PermissionName", TEXT, 128, required=True),
], unique=[("PermissionName",)]))

register(_e("RoleGrant", "GrantID", [
    Field("GrantID", INT),
    Field("RoleID", INT, required=True, fk="Role"),
    Field("PermissionID", INT, required=True, fk="Permission"),
    Field("Authorize", BOOL, required=True),
], unique=[("RoleID", "PermissionID")]))

register(_e("Faculty", "FacultyID", [
    Field("FacultyID", INT),
    Field("FacultyName", TEXT, 128, required=True),
    Field("FacultyDean", TEXT, 128),
], unique=[("FacultyName",)]))

register(_e("Department", "DepartmentID", [
    Field("DepartmentID", INT),
    Field("FacultyID", INT, required=True, fk="Faculty"),
    Field("DepartmentName", TEXT, 128, required=True),
]))

register(_e("Membership", "MembershipID", [
    Field("MembershipID", INT),
    Field("UserID", INT, required=True, fk="User"),
    Field("DepartmentID", INT, required=True, fk="Department"),
], unique=[("UserID", "DepartmentID")]))

register(_e("LogEntry", "LogID", [
    Field("LogID", INT),
    Field("UserID", INT, required=True, fk="User"),
    Field("LoginDate", TS, required=True),
    Field("LogoutDate", TS),
]))

# ---------------------------------------------------------------------------
# space inventory

register(_e("Building", "BuildingID", [
    Field("BuildingID", INT),
    Field("BuildingName", TEXT, 128, required=True),
    Field("Address", TEXT, 128),
    Field("City", TEXT, 64),
    Field("Province", TEXT, 64),
    Field("Country", TEXT, 64),
    Field("ZipCode", TEXT, 64),
], unique=[("BuildingName",)]))

register(_e("Floor", "FloorID", [
    Field("FloorID", INT),
    Field("BuildingID", INT, required=True, fk="Building"),
    Field("FloorNo", INT, required=True),
], unique=[("BuildingID", "FloorNo")]))

LOCATION_TYPES = ("Lab", "Room", "Office", "StorageCompartment")

register(_e("Location", "LocationID", [
    Field("LocationID", INT),
    Field("DepartmentID", INT, required=True, fk="Department"),
    Field("FloorID", INT, required=True, fk="Floor"),
    Field("LocationName", TEXT, 128, required=True),
    Field("Type", TEXT, 64, required=True),
    Field("Status", TEXT, 32),
    Field("SquareMeters", INT),
]))

# Column spelling below follows the legacy data dictionary, typo included.
register(_e("Lab", "LocationID", [
    Field("LocationID", INT, required=True, fk="Location"),
    Field("Reponsible", INT, fk="User"),
    Field("LabType", TEXT, 64),
    Field("Capacity", INT),
], pk_auto=False))

register(_e("LabMember", "LabMemberID", [
    Field("LabMemberID", INT),
    Field("LocationID", INT, required=True, fk="Location"),
    Field("UserID", INT, required=True, fk="User"),
], unique=[("LocationID", "UserID")]))

register(_e("Room", "LocationID", [
    Field("LocationID", INT, required=True, fk="Location"),
    Field("RoomNo", INT),
], pk_auto=False))

register(_e("Office", "LocationID", [
    Field("LocationID", INT, required=True, fk="Location"),
    Field("OfficeNo", INT),
], pk_auto=False))

register(_e("StorageCompartment", "LocationID", [
    Field("LocationID", INT, required=True, fk="Location"),
    Field("UserID", INT, required=True, fk="User"),
    Field("CompartmentNo", INT, required=True),
], pk_auto=False))

# ---------------------------------------------------------------------------
# physical assets

ASSET_CATEGORIES = ("Furniture", "StorageUnit", "Equipment", "Computer")
ASSET_STATUSES = ("In-stock", "In-use", "Broken", "Stolen", "Disposed")

register(_e("PhysicalAsset", "AssetID", [
    Field("AssetID", INT),
    Field("LocationID", INT, required=True, fk="Location"),
    Field("DepartmentID", INT, required=True, fk="Department"),
    Field("GroupID", INT, fk="Group"),
    Field("BarCode", TEXT, 64, required=True),
    Field("Owner", TEXT, 128, required=True),
    Field("LegacyCode", TEXT, 64),
    Field("DatePurchased", TS),
    Field("WarrantyExpiration", TS),
    Field("Manufacturer", TEXT, 128),
    Field("Model", TEXT, 128),
    Field("Category", TEXT, 64, required=True),
    Field("Status", TEXT, 32, required=True, default="In-stock"),
    Field("PoNumber", TEXT, 64),
    Field("PRequest", TEXT, 64),
], unique=[("BarCode",)]))

register(_e("Furniture", "AssetID", [
    Field("AssetID", INT, required=True, fk="PhysicalAsset"),
    Field("Type", TEXT, 64),
    Field("Dimension", TEXT, 64),
    Field("Color", TEXT, 64),
    Field("Finish", TEXT, 64),
], pk_auto=False))

register(_e("StorageUnit", "AssetID", [
    Field("AssetID", INT, required=True, fk="PhysicalAsset"),
    Field("Type", TEXT, 64),
    Field("NumberOfCompartment", INT, required=True, default=1),
], pk_auto=False))

register(_e("Equipment", "AssetID", [
    Field("AssetID", INT, required=True, fk="PhysicalAsset"),
    Field("Type", TEXT, 64),
    Field("UserID", INT, fk="User"),
    Field("SerialNo", TEXT, 64),
], pk_auto=False))

register(_e("Computer", "AssetID", [
    Field("AssetID", INT, required=True, fk="PhysicalAsset"),
    Field("Type", TEXT, 64),
    Field("Processor", TEXT, 64),
    Field("MACAddress", TEXT, 64),
    Field("HardDriveCap", TEXT, 64),
    Field("ROM", TEXT, 64),
    Field("RAM", TEXT, 64),
], pk_auto=False))

register(_e("Group", "GroupID", [
    Field("GroupID", INT),
    Field("UserID", INT, required=True, fk="User"),
    Field("LocationID", INT, required=True, fk="Location"),
    Field("GroupName", TEXT, 128),
    Field("Status", TEXT, 32, required=True, default="active"),
]))

register(_e("AdditionalParameter", "ParameterID", [
    Field("ParameterID", INT),
    Field("AssetID", INT, required=True, fk="PhysicalAsset"),
    Field("ParameterName", TEXT, 128, required=True),
    Field("Value", TEXT, 64),
], unique=[("AssetID", "ParameterName")]))

# ---------------------------------------------------------------------------
# software and licensing

register(_e("Software", "SoftwareID", [
    Field("SoftwareID", INT),
    Field("Name", TEXT, 128, required=True),
    Field("VendorID", TEXT, 64),
    Field("VendorName", TEXT, 128),
    Field("Category", TEXT, 64),
    Field("Version", TEXT, 64, required=True),
    Field("Media", TEXT, 128),
], unique=[("Name", "Version")]))

register(_e("License", "LicenseID", [
    Field("LicenseID", INT),
    Field("SoftwareID", INT, required=True, fk="Software"),
    Field("DepartmentID", INT, required=True, fk="Department"),
    Field("UserID", INT, required=True, fk="User"),
    Field("Key", TEXT, 128, required=True),
    Field("DatePurchased", TS, required=True),
    Field("PoNumber", TEXT, 64),
    Field("Type", TEXT, 64, required=True),
    Field("ExpirationDate", TS, required=True),
    Field("SeatCount", INT, required=True),
]))

register(_e("SeatAssignment", "AssignmentID", [
    Field("AssignmentID", INT),
    Field("LicenseID", INT, required=True, fk="License"),
    Field("UserID", INT, required=True, fk="User"),
], unique=[("LicenseID", "UserID")]))

register(_e("Installation", "InstallationID", [
    Field("InstallationID", INT),
    Field("LicenseID", INT, required=True, fk="License"),
    Field("AssetID", INT, required=True, fk="PhysicalAsset"),
], unique=[("LicenseID", "AssetID")]))

# ---------------------------------------------------------------------------
# change requests

REQUEST_STATUSES = ("Pending", "Approved", "Closed")
REQUEST_KINDS = ("General", "Specific")
GENERAL_CATEGORIES = ("Technical", "Administrative")
SPECIFIC_CATEGORIES = ("MoveAsset", "AssignAsset", "ReserveCompartment",
                       "Other")

register(_e("Request", "RequestID", [
    Field("RequestID", INT),
    Field("UserID", INT, required=True, fk="User"),
    Field("ApproverID", INT, fk="User"),
    Field("Kind", TEXT, 32, required=True),
    Field("Category", TEXT, 64, required=True),
    Field("Description", TEXT, 256),
    Field("Status", TEXT, 32, required=True, default="Pending"),
    Field("ClosureNote", TEXT, 256),
    Field("BarCode", TEXT, 64),
    Field("LocationName", TEXT, 128),
    Field("GroupID", INT),
    Field("UserName", TEXT, 64),
    Field("CompartmentNo", INT),
]))

# Asset extension table per category, ordered base-first.
CATEGORY_EXTENSIONS: dict[str, tuple[str, ...]] = {
    "Furniture": ("Furniture",),
    "StorageUnit": ("Furniture", "StorageUnit"),
    "Equipment": ("Equipment",),
    "Computer": ("Equipment", "Computer"),
}

# Location profile table per location type; None means the profile row is
# optional and only written when profile fields are supplied.
TYPE_PROFILES: dict[str, str] = {
    "Lab": "Lab",
    "Room": "Room",
    "Office": "Office",
    "StorageCompartment": "StorageCompartment",
}
