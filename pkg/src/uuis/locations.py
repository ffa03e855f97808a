"""Space inventory: buildings with their floors, locations of four types,
lab staffing, and the config file that drives which location fields are
searchable and how their labels read in each locale."""
from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .auth import LOCALES, Session
from .permissions import PermissionService
from .schema import LOCATION_TYPES
from .storage import Criterion, Mutation, Ref, OP_EQ
from .storage.gateway import MemoryStore
from . import directory

BUILDING_DRAFT_KEYS = ("BuildingName", "Address", "City", "Province",
                       "Country", "ZipCode")
BASE_DRAFT_KEYS = ("LocationName", "Type", "DepartmentID", "FloorID",
                   "Status", "SquareMeters")
PROFILE_DRAFT_KEYS = {
    "Lab": ("Reponsible", "LabType", "Capacity"),
    "Room": ("RoomNo",),
    "Office": ("OfficeNo",),
    "StorageCompartment": ("UserID", "CompartmentNo"),
}
MANDATORY_DRAFT_FIELDS = ("LocationName", "Type", "DepartmentID", "FloorID")

# every name a search config line may mention: base columns plus the
# joined display columns
SEARCHABLE_FIELDS = ("LocationName", "Type", "Status", "SquareMeters",
                     "BuildingName", "FloorNo", "DepartmentName",
                     "Responsible")

DEFAULT_CONFIG_TEXT = """\
# Searchable fields for the space inventory, one block per field.
# field.<name>.en / field.<name>.fr set the column labels; visible
# controls whether the field may be searched at all.
locale=en

field.LocationName.en=Location name
field.LocationName.fr=Nom de l'emplacement
field.LocationName.visible=true

field.Type.en=Type
field.Type.fr=Type
field.Type.visible=true

field.Status.en=Status
field.Status.fr=Statut
field.Status.visible=true

field.BuildingName.en=Building
field.BuildingName.fr=Batiment
field.BuildingName.visible=true

field.FloorNo.en=Floor
field.FloorNo.fr=Etage
field.FloorNo.visible=true

field.DepartmentName.en=Department
field.DepartmentName.fr=Departement
field.DepartmentName.visible=true

field.Responsible.en=Responsible
field.Responsible.fr=Responsable
field.Responsible.visible=true
"""


@dataclass(frozen=True)
class SearchField:
    name: str
    label_en: str
    label_fr: str
    visible: bool

    def label(self, locale):
        return self.label_fr if locale == "fr" else self.label_en


@dataclass(frozen=True)
class SearchConfig:
    locale: str
    fields: tuple[SearchField, ...]

    def resolve(self, name):
        """Case-insensitive lookup; hidden fields are known but rejected."""
        for field in self.fields:
            if field.name.lower() == name.lower():
                if not field.visible:
                    raise errors.FieldNotSearchable(
                        "field is not searchable: " + field.name,
                        field=field.name)
                return field.name
        raise errors.UnknownField("unknown search field: " + name,
                                  field=name)

    def view(self, locale=None):
        active = locale or self.locale
        return [{"name": f.name, "label": f.label(active),
                 "visible": f.visible} for f in self.fields]


def parse_search_config(text):
    """Parse the locations search config. Raises ParseError carrying the
    offending line number in .position."""
    locale = "en"
    order: list[str] = []
    props: dict[str, dict[str, str]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise errors.ParseError("expected key=value", position=line_no)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "locale":
            if value not in LOCALES:
                raise errors.ParseError(
                    "unsupported locale: " + value, position=line_no)
            locale = value
            continue
        parts = key.split(".")
        if len(parts) != 3 or parts[0] != "field":
            raise errors.ParseError("unknown key: " + key, position=line_no)
        _, name, prop = parts
        if not any(name.lower() == f.lower() for f in SEARCHABLE_FIELDS):
            raise errors.UnknownField(
                "unknown search field: " + name, field=name,
                position=line_no)
        canonical = next(f for f in SEARCHABLE_FIELDS
                         if f.lower() == name.lower())
        if prop not in ("en", "fr", "visible"):
            raise errors.ParseError(
                "unknown field property: " + prop, position=line_no)
        if prop == "visible" and value.lower() not in ("true", "false"):
            raise errors.ParseError(
                "visible must be true or false", position=line_no)
        if canonical not in props:
            props[canonical] = {}
            order.append(canonical)
        props[canonical][prop] = value
    fields = tuple(
        SearchField(name=name,
                    label_en=entry.get("en", name),
                    label_fr=entry.get("fr", entry.get("en", name)),
                    visible=entry.get("visible", "true").lower() == "true")
        for name, entry in ((n, props[n]) for n in order))
    return SearchConfig(locale=locale, fields=fields)


def load_search_config(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise errors.ParseError("cannot read config: %s" % exc)
    return parse_search_config(text)


DEFAULT_CONFIG = parse_search_config(DEFAULT_CONFIG_TEXT)


class LocationService:
    def __init__(self, store: MemoryStore, permissions: PermissionService,
                 config: SearchConfig = DEFAULT_CONFIG):
        self.store = store
        self.permissions = permissions
        self.config = config

    def reload_config(self, path):
        # parse fully before the swap so readers never see a blend
        self.config = load_search_config(path)
        return self.config

    def search_fields(self, session: Session):
        return self.config.view(locale=session.locale)

    # -- buildings ----------------------------------------------------

    def create_building(self, session: Session, draft: dict,
                        floor_count: int):
        self.permissions.require(session, "location.add")
        name = draft.get("BuildingName")
        if not name:
            raise errors.MissingMandatory("BuildingName is mandatory",
                                          field="BuildingName")
        for key in draft:
            if key not in BUILDING_DRAFT_KEYS:
                raise errors.UnknownField("unknown building field: " + key,
                                          field=key)
        if not isinstance(floor_count, int) or floor_count < 1:
            raise errors.ValidationFailed(
                "floor_count must be a positive integer",
                field="floor_count")
        if self.store.count("Building",
                            [Criterion("BuildingName", OP_EQ, name)]):
            raise errors.DuplicateName(
                "a building with that name already exists",
                field="BuildingName")
        batch = [Mutation.insert("Building", **draft)]
        for floor_no in range(1, floor_count + 1):
            batch.append(Mutation.insert("Floor", BuildingID=Ref(0),
                                         FloorNo=floor_no))
        assigned = self.store.apply(batch)
        return {"BuildingID": assigned[0], "FloorIDs": assigned[1:]}

    def list_buildings(self, session: Session):
        buildings = self.store.select("Building").items
        floors = self.store.select("Floor").items
        by_building: dict[int, list] = {}
        for floor in floors:
            by_building.setdefault(floor["BuildingID"], []).append(floor)
        out = []
        for row in buildings:
            row.pop("_version", None)
            row["Floors"] = [
                {"FloorID": f["FloorID"], "FloorNo": f["FloorNo"]}
                for f in sorted(by_building.get(row["BuildingID"], []),
                                key=lambda f: f["FloorNo"])]
            out.append(row)
        return out

    # -- locations ----------------------------------------------------

    def add_location(self, session: Session, draft: dict):
        self.permissions.require(session, "location.add")
        for field in MANDATORY_DRAFT_FIELDS:
            if field not in draft or draft[field] in (None, ""):
                raise errors.MissingMandatory(
                    "%s is mandatory" % field, field=field)
        loc_type = draft["Type"]
        if loc_type not in LOCATION_TYPES:
            raise errors.ValidationFailed(
                "unknown location type: %s" % loc_type, field="Type")
        base = {}
        profile = {}
        profile_keys = PROFILE_DRAFT_KEYS[loc_type]
        for key, value in draft.items():
            if key in BASE_DRAFT_KEYS:
                base[key] = value
            elif key in profile_keys:
                profile[key] = value
            else:
                for other, keys in PROFILE_DRAFT_KEYS.items():
                    if other != loc_type and key in keys:
                        raise errors.ExtensionMismatch(
                            "field %s does not apply to a %s"
                            % (key, loc_type), field=key)
                raise errors.UnknownField("unknown location field: " + key,
                                          field=key)
        if self.store.get("Floor", base["FloorID"]) is None:
            raise errors.UnknownFloor("no such floor: %s" % base["FloorID"],
                                      field="FloorID")
        if self.store.get("Department", base["DepartmentID"]) is None:
            raise errors.ValidationFailed(
                "no such department: %s" % base["DepartmentID"],
                field="DepartmentID")
        self._check_profile(loc_type, profile, creating=True)
        batch = [Mutation.insert("Location", **base)]
        if loc_type == "Lab":
            batch.append(Mutation.insert("Lab", LocationID=Ref(0),
                                         **profile))
        elif loc_type == "StorageCompartment":
            batch.append(Mutation.insert("StorageCompartment",
                                         LocationID=Ref(0), **profile))
        elif profile:
            batch.append(Mutation.insert(loc_type, LocationID=Ref(0),
                                         **profile))
        assigned = self.store.apply(batch)
        return assigned[0]

    def _check_profile(self, loc_type, profile, creating):
        if loc_type == "Lab":
            if creating and not profile:
                raise errors.MissingProfile(
                    "a lab needs its profile: responsible, type or "
                    "capacity")
            responsible = profile.get("Reponsible")
            if responsible is not None and \
                    self.store.get("User", responsible) is None:
                raise errors.NotFound("no such user: %s" % responsible)
            capacity = profile.get("Capacity")
            if capacity is not None and \
                    (not isinstance(capacity, int) or capacity < 0):
                raise errors.ValidationFailed(
                    "Capacity must be a non-negative integer",
                    field="Capacity")
        elif loc_type == "StorageCompartment":
            for field in ("UserID", "CompartmentNo"):
                if creating and profile.get(field) is None:
                    raise errors.MissingProfile(
                        "a storage compartment needs %s" % field,
                        field=field)
            user_id = profile.get("UserID")
            if user_id is not None and \
                    self.store.get("User", user_id) is None:
                raise errors.NotFound("no such user: %s" % user_id)

    def _composite(self, location, names):
        floor = names["floors"].get(location["FloorID"], {})
        building = names["buildings"].get(floor.get("BuildingID"), {})
        department = names["departments"].get(location["DepartmentID"], {})
        lab = names["labs"].get(location["LocationID"])
        responsible = ""
        if lab and lab.get("Reponsible"):
            responsible = names["users"].get(lab["Reponsible"], "")
        return {
            "LocationID": location["LocationID"],
            "LocationName": location["LocationName"],
            "Type": location["Type"],
            "Status": location.get("Status"),
            "SquareMeters": location.get("SquareMeters"),
            "BuildingName": building.get("BuildingName"),
            "FloorNo": floor.get("FloorNo"),
            "DepartmentName": department.get("DepartmentName"),
            "Responsible": responsible or None,
        }

    def _names(self):
        return {
            "floors": {f["FloorID"]: f
                       for f in self.store.select("Floor").items},
            "buildings": {b["BuildingID"]: b
                          for b in self.store.select("Building").items},
            "departments": {d["DepartmentID"]: d
                            for d in self.store.select("Department").items},
            "labs": {l["LocationID"]: l
                     for l in self.store.select("Lab").items},
            "users": {u["UserID"]: directory.full_name(u)
                      for u in self.store.select("User").items},
        }

    def search_locations(self, session: Session, filters: dict = None,
                         offset: int = 0, limit: int = 50):
        """Case-insensitive substring match per field; several fields
        narrow the result to their intersection."""
        resolved = {}
        for name, needle in (filters or {}).items():
            canonical = self.config.resolve(name)
            if needle not in (None, ""):
                resolved[canonical] = str(needle).lower()
        names = self._names()
        rows = []
        for location in self.store.select("Location").items:
            row = self._composite(location, names)
            if all(needle in str(row[field] if row[field] is not None
                                 else "").lower()
                   for field, needle in resolved.items()):
                rows.append(row)
        total = len(rows)
        return rows[offset:offset + limit], total

    def get_location(self, session: Session, location_id: int):
        location = self.store.get("Location", location_id)
        if location is None:
            raise errors.NotFound("no such location: %s" % location_id)
        names = self._names()
        detail = self._composite(location, names)
        detail["Version"] = location["_version"]
        detail["FloorID"] = location["FloorID"]
        detail["DepartmentID"] = location["DepartmentID"]
        floor = names["floors"].get(location["FloorID"], {})
        detail["BuildingID"] = floor.get("BuildingID")
        if location["Type"] == "Lab":
            lab = names["labs"].get(location_id) or {}
            detail["Reponsible"] = lab.get("Reponsible")
            detail["LabType"] = lab.get("LabType")
            detail["Capacity"] = lab.get("Capacity")
            members = self.store.select("LabMember", [
                Criterion("LocationID", OP_EQ, location_id)]).items
            detail["Members"] = [
                {"UserID": m["UserID"],
                 "FullName": names["users"].get(m["UserID"], "")}
                for m in sorted(members, key=lambda m: m["UserID"])]
        elif location["Type"] == "Room":
            profile = self.store.get("Room", location_id)
            detail["RoomNo"] = profile["RoomNo"] if profile else None
        elif location["Type"] == "Office":
            profile = self.store.get("Office", location_id)
            detail["OfficeNo"] = profile["OfficeNo"] if profile else None
        else:
            profile = self.store.get("StorageCompartment", location_id)
            detail["UserID"] = profile["UserID"] if profile else None
            detail["CompartmentNo"] = \
                profile["CompartmentNo"] if profile else None
        return detail

    def edit_location(self, session: Session, location_id: int,
                      changes: dict, base_version: int = None):
        self.permissions.require(session, "location.edit")
        location = self.store.get("Location", location_id)
        if location is None:
            raise errors.NotFound("no such location: %s" % location_id)
        if "Type" in changes:
            raise errors.ImmutableField("Type is fixed at creation",
                                        field="Type")
        loc_type = location["Type"]
        base = {}
        profile = {}
        profile_keys = PROFILE_DRAFT_KEYS[loc_type]
        for key, value in changes.items():
            if key in ("LocationName", "Status", "SquareMeters",
                       "DepartmentID", "FloorID"):
                base[key] = value
            elif key in profile_keys:
                profile[key] = value
            else:
                for other, keys in PROFILE_DRAFT_KEYS.items():
                    if other != loc_type and key in keys:
                        raise errors.ExtensionMismatch(
                            "field %s does not apply to a %s"
                            % (key, loc_type), field=key)
                raise errors.UnknownField("unknown location field: " + key,
                                          field=key)
        if "FloorID" in base and \
                self.store.get("Floor", base["FloorID"]) is None:
            raise errors.UnknownFloor("no such floor: %s" % base["FloorID"],
                                      field="FloorID")
        if "DepartmentID" in base and \
                self.store.get("Department", base["DepartmentID"]) is None:
            raise errors.ValidationFailed(
                "no such department: %s" % base["DepartmentID"],
                field="DepartmentID")
        self._check_profile(loc_type, profile, creating=False)
        if loc_type == "Lab" and "Capacity" in profile and \
                profile["Capacity"] is not None:
            members = self.store.count("LabMember", [
                Criterion("LocationID", OP_EQ, location_id)])
            if members > profile["Capacity"]:
                raise errors.CapacityExceeded(
                    "the lab already has %d members" % members,
                    field="Capacity")
        batch = []
        if base:
            batch.append(Mutation.update("Location", location_id, base,
                                         base_version=base_version))
        if profile:
            kind = loc_type
            if self.store.get(kind, location_id) is None:
                batch.append(Mutation.insert(kind, LocationID=location_id,
                                             **profile))
            else:
                batch.append(Mutation.update(kind, location_id, profile))
        if batch:
            self.store.apply(batch)
        return self.get_location(session, location_id)

    # -- lab staffing -------------------------------------------------

    def _lab_or_raise(self, location_id):
        location = self.store.get("Location", location_id)
        if location is None:
            raise errors.NotFound("no such location: %s" % location_id)
        if location["Type"] != "Lab":
            raise errors.NotALab("location %s is not a lab" % location_id)
        lab = self.store.get("Lab", location_id)
        if lab is None:
            raise errors.NotALab("location %s is not a lab" % location_id)
        return lab

    def assign_lab_responsible(self, session: Session, location_id: int,
                               user_id: int):
        self.permissions.require(session, "lab.assign")
        self._lab_or_raise(location_id)
        if self.store.get("User", user_id) is None:
            raise errors.NotFound("no such user: %s" % user_id)
        self.store.apply([Mutation.update("Lab", location_id,
                                          {"Reponsible": user_id})])
        return self.get_location(session, location_id)

    def add_lab_member(self, session: Session, location_id: int,
                       user_id: int):
        self.permissions.require(session, "lab.assign")
        lab = self._lab_or_raise(location_id)
        if self.store.get("User", user_id) is None:
            raise errors.NotFound("no such user: %s" % user_id)
        members = self.store.select("LabMember", [
            Criterion("LocationID", OP_EQ, location_id)]).items
        if any(m["UserID"] == user_id for m in members):
            raise errors.AlreadyMember(
                "user %s is already a member" % user_id)
        capacity = lab.get("Capacity")
        if capacity is not None and len(members) >= capacity:
            raise errors.CapacityExceeded(
                "the lab is at its capacity of %d" % capacity)
        self.store.apply([Mutation.insert("LabMember",
                                          LocationID=location_id,
                                          UserID=user_id)])
        return self.get_location(session, location_id)
