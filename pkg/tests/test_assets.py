"""Asset inventory: scoped search, intake with category extensions, edit
rules, parameters, groups and the report counts."""
from __future__ import annotations

import pytest

from uuis import errors
from uuis.assets import AssetService
from uuis.auth import AuthService
from uuis.permissions import PermissionService
from uuis.query import parse
from uuis.storage import Criterion, Mutation, OP_EQ

from conftest import PASSWORDS


@pytest.fixture
def world(demo_store, fake_clock):
    perms = PermissionService(demo_store)
    auth = AuthService(demo_store, perms, now=fake_clock)
    return demo_store, perms, auth, AssetService(demo_store, perms)


@pytest.fixture
def login(world):
    _, _, auth, _ = world

    def _login(username):
        return auth.login(username, PASSWORDS[username])
    return _login


def ids(records):
    return sorted(r["AssetID"] for r in records)


# ---------------------------------------------------------------------------
# visibility

class TestScope:
    # expected sets worked out by hand from the demo fixture
    @pytest.mark.parametrize("username,expected", [
        ("a_khan", list(range(1, 13))),            # level 3: everything
        ("j_doe", [1, 2, 3, 4, 5, 6, 7, 12]),      # level 2: Owner == ENCS
        ("r_roe", [8, 9]),                         # level 2: Owner == Arts
        ("m_lee", [1, 2, 3, 4, 5, 12]),            # level 1: department 1
        ("s_chen", [10, 11]),                      # level 1: department 5
    ])
    def test_visible_sets(self, world, login, username, expected):
        _, _, _, assets = world
        records, total = assets.search_assets(login(username))
        assert ids(records) == expected
        assert total == len(expected)

    def test_two_department_user_sees_active_department_only(self, world):
        store, perms, auth, assets = world
        pending = auth.login("v_patel", PASSWORDS["v_patel"])
        session1 = auth.choose_department(pending.token, 1)
        records, _ = assets.search_assets(session1)
        assert ids(records) == [1, 2, 3, 4, 5, 12]
        pending = auth.login("v_patel", PASSWORDS["v_patel"])
        session2 = auth.choose_department(pending.token, 2)
        records, _ = assets.search_assets(session2)
        assert ids(records) == [6, 7]

    def test_level_zero_sees_own_equipment_only(self, world, login):
        store, perms, auth, assets = world
        admin = login("a_khan")
        perms.set_grant(admin, 1, "asset.search", True)  # role of level 0
        store.apply([Mutation.update("Equipment", 5, {"UserID": 2})])
        records, _ = assets.search_assets(login("test1"))
        assert ids(records) == [5]

    def test_search_needs_permission(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.Forbidden):
            assets.search_assets(login("test1"))

    def test_get_out_of_scope_reads_as_missing(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.NotFound):
            assets.get_asset(login("s_chen"), 1)
        with pytest.raises(errors.NotFound):
            assets.get_asset(login("a_khan"), 999)

    def test_scope_matches_linear_scan_oracle(self, world, login):
        store, _, _, assets = world
        cases = {
            "a_khan": lambda a, e: True,
            "j_doe": lambda a, e: a["Owner"] == "ENCS",
            "r_roe": lambda a, e: a["Owner"] == "Arts",
            "m_lee": lambda a, e: a["DepartmentID"] == 1,
            "s_chen": lambda a, e: a["DepartmentID"] == 5,
        }
        equipment = {e["AssetID"]: e for e in store.select("Equipment").items}
        for username, rule in cases.items():
            expected = sorted(
                a["AssetID"] for a in store.select("PhysicalAsset").items
                if rule(a, equipment.get(a["AssetID"])))
            records, _ = assets.search_assets(login(username))
            assert ids(records) == expected, username


# ---------------------------------------------------------------------------
# search queries

class TestSearch:
    @pytest.mark.parametrize("text,expected", [
        ('Type: "Plastic Classroom Chair"', [1, 2]),
        ('Location: "H-623" AND Type: "Plastic Classroom Chair"', [1, 2]),
        ('Category: Computer', [4, 5, 9, 11]),
        ('Status: "In-use" AND Category: Computer', [4, 9, 11]),
        ('Owner: arts', [8, 9]),                    # case-insensitive
        ('BarCode: "BC-000*"', list(range(1, 10))),  # wildcard
        ('AssetID: 7', [7]),
        ('Manufacturer: Dell OR Manufacturer: HP', [4, 9, 11]),
        ('RAM: "16GB"', [4]),
        ('Group: "Classroom 623 set"', [2, 3]),
        ('Status: Disposed', []),
    ])
    def test_admin_queries(self, world, login, text, expected):
        _, _, _, assets = world
        records, total = assets.search_assets(login("a_khan"),
                                              query=parse(text))
        assert ids(records) == expected
        assert total == len(expected)

    def test_query_is_scoped_too(self, world, login):
        _, _, _, assets = world
        records, _ = assets.search_assets(login("r_roe"),
                                          query=parse("Category: Computer"))
        assert ids(records) == [9]

    def test_unknown_search_field(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.UnknownField):
            assets.search_assets(login("a_khan"), query=parse("Sparkle: x"))

    def test_wildcard_on_numeric_field(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.BadValueForType):
            assets.search_assets(login("a_khan"), query=parse('AssetID: "1*"'))

    def test_paging(self, world, login):
        _, _, _, assets = world
        session = login("a_khan")
        first, total = assets.search_assets(session, offset=0, limit=5)
        second, _ = assets.search_assets(session, offset=5, limit=5)
        assert total == 12
        assert ids(first) == [1, 2, 3, 4, 5]
        assert ids(second) == [6, 7, 8, 9, 10]


# ---------------------------------------------------------------------------
# detail reads

class TestDetail:
    def test_flattened_record(self, world, login):
        _, _, _, assets = world
        detail = assets.get_asset(login("a_khan"), 4)
        assert detail["BarCode"] == "BC-0004"
        assert detail["Location"] == "H-601"
        assert detail["Type"] == "Desktop"           # computer extension
        assert detail["EquipmentType"] == "Workstation"
        assert detail["SerialNo"] == "SN-100"
        assert detail["RAM"] == "16GB"
        assert detail["Parameters"] == [
            {"ParameterName": "Video Card", "Value": "RTX A2000"}]
        assert detail["Version"] == 1

    def test_storage_unit_keeps_both_types(self, world, login):
        _, _, _, assets = world
        detail = assets.get_asset(login("a_khan"), 6)
        assert detail["Type"] == "Cabinet"            # storage extension
        assert detail["FurnitureType"] == "Cabinet"   # furniture extension
        assert detail["NumberOfCompartment"] == 4

    def test_dimensions_parse_out(self, world, login):
        _, _, _, assets = world
        detail = assets.get_asset(login("a_khan"), 1)
        assert detail["Dimension"] == "90x45x45"
        assert (detail["Height"], detail["Width"], detail["Depth"]) == \
            (90, 45, 45)
        assert detail["Group"] is None


# ---------------------------------------------------------------------------
# intake

def furniture_draft(**over):
    draft = {
        "BarCode": "BC-9001", "Owner": "ENCS", "Category": "Furniture",
        "LocationID": 2, "DepartmentID": 1, "Type": "Stool",
        "Height": 45, "Width": 30, "Depth": 30, "Color": "Red",
    }
    draft.update(over)
    return draft


class TestAddAsset:
    def test_furniture(self, world, login):
        store, _, _, assets = world
        asset_id = assets.add_asset(login("j_doe"), furniture_draft())
        row = store.get("PhysicalAsset", asset_id)
        assert row["Status"] == "In-stock"            # default
        ext = store.get("Furniture", asset_id)
        assert ext["Type"] == "Stool"
        assert ext["Dimension"] == "45x30x30"

    def test_computer_writes_both_extensions(self, world, login):
        store, _, _, assets = world
        asset_id = assets.add_asset(login("a_khan"), {
            "BarCode": "BC-9002", "Owner": "Science", "Category": "Computer",
            "LocationID": 7, "DepartmentID": 5, "EquipmentType": "Server",
            "SerialNo": "SN-900", "Type": "Rack server",
            "Processor": "EPYC 9354", "RAM": "256GB",
            "MACAddress": "AA:BB:CC:00:11:22",
        })
        assert store.get("Equipment", asset_id)["Type"] == "Server"
        assert store.get("Computer", asset_id)["Type"] == "Rack server"

    def test_storage_unit_defaults_one_compartment(self, world, login):
        store, _, _, assets = world
        asset_id = assets.add_asset(login("a_khan"), {
            "BarCode": "BC-9003", "Owner": "ENCS", "Category": "StorageUnit",
            "LocationID": 5, "DepartmentID": 2,
        })
        assert store.get("StorageUnit",
                         asset_id)["NumberOfCompartment"] == 1
        assert store.get("Furniture", asset_id) is not None

    def test_needs_permission(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.Forbidden):
            assets.add_asset(login("m_lee"), furniture_draft())

    def test_checks_permission_exactly_once(self, world, login):
        _, perms, _, assets = world
        session = login("j_doe")
        before = perms.verify_count
        assets.add_asset(session, furniture_draft())
        assert perms.verify_count == before + 1

    @pytest.mark.parametrize("drop", ["BarCode", "Owner", "Category",
                                      "LocationID", "DepartmentID"])
    def test_mandatory_fields(self, world, login, drop):
        _, _, _, assets = world
        draft = furniture_draft()
        del draft[drop]
        with pytest.raises(errors.MissingMandatory):
            assets.add_asset(login("j_doe"), draft)

    def test_bad_category(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.BadCategory):
            assets.add_asset(login("j_doe"),
                             furniture_draft(Category="Vehicle"))

    def test_furniture_needs_its_type(self, world, login):
        _, _, _, assets = world
        draft = furniture_draft()
        del draft["Type"]
        with pytest.raises(errors.MissingMandatory) as exc:
            assets.add_asset(login("j_doe"), draft)
        assert exc.value.field == "Type"

    def test_duplicate_barcode(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.DuplicateBarCode):
            assets.add_asset(login("j_doe"),
                             furniture_draft(BarCode="BC-0001"))

    def test_extension_mismatch(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.ExtensionMismatch):
            assets.add_asset(login("j_doe"),
                             furniture_draft(Processor="i9"))

    def test_faculty_users_record_for_their_own_faculty(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.FacultyMismatch):
            assets.add_asset(login("j_doe"), furniture_draft(Owner="Arts"))

    def test_admin_records_for_any_faculty(self, world, login):
        _, _, _, assets = world
        draft = furniture_draft(Owner="Arts", LocationID=6, DepartmentID=3)
        assert assets.add_asset(login("a_khan"), draft)

    def test_unresolvable_references(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.InvalidLocationId):
            assets.add_asset(login("j_doe"),
                             furniture_draft(LocationID=999))
        with pytest.raises(errors.InvalidGroupId):
            assets.add_asset(login("j_doe"), furniture_draft(GroupID=999))
        with pytest.raises(errors.InvalidUserId):
            assets.add_asset(login("j_doe"), {
                "BarCode": "BC-9010", "Owner": "ENCS",
                "Category": "Equipment", "LocationID": 1,
                "DepartmentID": 1, "UserID": 999})

    def test_mac_format(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.ValidationFailed):
            assets.add_asset(login("a_khan"), {
                "BarCode": "BC-9011", "Owner": "ENCS",
                "Category": "Computer", "LocationID": 1, "DepartmentID": 1,
                "MACAddress": "not-a-mac"})

    def test_timestamp_format(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.ValidationFailed):
            assets.add_asset(login("j_doe"),
                             furniture_draft(DatePurchased="last summer"))

    def test_partial_dimensions_rejected(self, world, login):
        _, _, _, assets = world
        draft = furniture_draft()
        del draft["Depth"]
        with pytest.raises(errors.ValidationFailed):
            assets.add_asset(login("j_doe"), draft)

    def test_nothing_written_on_failure(self, world, login):
        store, _, _, assets = world
        session = login("j_doe")
        before = store.dump()
        with pytest.raises(errors.ExtensionMismatch):
            assets.add_asset(session, furniture_draft(RAM="16GB"))
        assert store.dump() == before


# ---------------------------------------------------------------------------
# edits

class TestUpdateAsset:
    def test_editable_fields(self, world, login):
        _, _, _, assets = world
        detail = assets.update_asset(login("j_doe"), 4, {
            "Status": "Broken", "LocationID": 2, "RAM": "32GB",
            "UserID": 4})
        assert detail["Status"] == "Broken"
        assert detail["Location"] == "H-623"
        assert detail["RAM"] == "32GB"
        assert detail["UserID"] == 4

    @pytest.mark.parametrize("field,value", [
        ("BarCode", "BC-X"), ("PRequest", "PR-9"), ("PoNumber", "PO-9"),
        ("Manufacturer", "Acme"), ("Model", "M2"), ("Category", "Furniture"),
        ("SerialNo", "SN-X"), ("Type", "Tower"), ("EquipmentType", "X"),
    ])
    def test_intake_fields_are_fixed(self, world, login, field, value):
        _, _, _, assets = world
        with pytest.raises(errors.ImmutableField):
            assets.update_asset(login("a_khan"), 4, {field: value})

    def test_owner_moves_need_level_three(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.Forbidden):
            assets.update_asset(login("j_doe"), 1, {"Owner": "Arts"})
        detail = assets.update_asset(login("a_khan"), 1, {"Owner": "Arts"})
        assert detail["Owner"] == "Arts"

    def test_dimension_merge_keeps_untouched_axes(self, world, login):
        _, _, _, assets = world
        detail = assets.update_asset(login("j_doe"), 1, {"Height": 95})
        assert detail["Dimension"] == "95x45x45"

    def test_out_of_scope_is_missing(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.NotFound):
            assets.update_asset(login("r_roe"), 1, {"Status": "In-use"})

    def test_stale_version_conflicts(self, world, login):
        _, _, _, assets = world
        session = login("a_khan")
        version = assets.get_asset(session, 1)["Version"]
        assets.update_asset(session, 1, {"Status": "In-use"})
        with pytest.raises(errors.Conflict):
            assets.update_asset(session, 1, {"Status": "Disposed"},
                                base_version=version)

    def test_unknown_field(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.UnknownField):
            assets.update_asset(login("a_khan"), 1, {"Sparkle": "x"})

    def test_status_vocabulary_enforced(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.ValidationFailed):
            assets.update_asset(login("a_khan"), 1, {"Status": "Lost"})
        with pytest.raises(errors.ValidationFailed):
            assets.add_asset(login("a_khan"),
                             furniture_draft(Status="Lost"))


class TestParameters:
    def test_insert_then_overwrite(self, world, login):
        _, _, _, assets = world
        session = login("j_doe")
        assets.set_parameter(session, 5, "Dock station", "WD19S")
        assert assets.get_asset(session, 5)["Parameters"] == [
            {"ParameterName": "Dock station", "Value": "WD19S"}]
        assets.set_parameter(session, 5, "Dock station", "WD22TB4")
        assert assets.get_asset(session, 5)["Parameters"] == [
            {"ParameterName": "Dock station", "Value": "WD22TB4"}]

    def test_name_and_value_caps(self, world, login):
        _, _, _, assets = world
        session = login("j_doe")
        with pytest.raises(errors.FieldTooLong):
            assets.set_parameter(session, 5, "x" * 129, "v")
        with pytest.raises(errors.FieldTooLong):
            assets.set_parameter(session, 5, "ok", "v" * 65)
        with pytest.raises(errors.MissingMandatory):
            assets.set_parameter(session, 5, "", "v")

    def test_scope_applies(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.NotFound):
            assets.set_parameter(login("r_roe"), 5, "Dock", "X")


# ---------------------------------------------------------------------------
# groups

class TestGroups:
    def test_create_attaches_members(self, world, login):
        store, _, _, assets = world
        session = login("j_doe")
        group_id = assets.create_group(session, {
            "GroupName": "Lab bench", "LocationID": 1,
            "MemberAssetIDs": [4, 5]})
        group = assets.get_group(session, group_id)
        assert group["Status"] == "active"
        assert [m["AssetID"] for m in group["Members"]] == [4, 5]
        assert store.get("PhysicalAsset", 4)["GroupID"] == group_id

    def test_empty_group_rejected(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.EmptyGroup):
            assets.create_group(login("j_doe"), {
                "LocationID": 1, "MemberAssetIDs": []})

    def test_invalid_member_reports_its_position(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.InvalidAssetId) as exc:
            assets.create_group(login("j_doe"), {
                "LocationID": 1, "MemberAssetIDs": [4, 999]})
        assert exc.value.position == 2

    def test_cross_faculty_members_rejected_for_level_two(self, world,
                                                          login):
        _, _, _, assets = world
        with pytest.raises(errors.CrossFaculty):
            assets.create_group(login("j_doe"), {
                "LocationID": 1, "MemberAssetIDs": [4, 8]})

    def test_admin_may_group_across_faculties(self, world, login):
        _, _, _, assets = world
        session = login("a_khan")
        group_id = assets.create_group(session, {
            "LocationID": 1, "MemberAssetIDs": [4, 8]})
        assert len(assets.get_group(session, group_id)["Members"]) == 2

    def test_invalid_location_and_user(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.InvalidLocationId):
            assets.create_group(login("j_doe"), {
                "LocationID": 999, "MemberAssetIDs": [4]})
        with pytest.raises(errors.InvalidUserId):
            assets.create_group(login("j_doe"), {
                "LocationID": 1, "UserID": 999, "MemberAssetIDs": [4]})

    def test_needs_permission(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.Forbidden):
            assets.create_group(login("m_lee"), {
                "LocationID": 1, "MemberAssetIDs": [4]})

    def test_update_replaces_members(self, world, login):
        store, _, _, assets = world
        session = login("j_doe")
        group = assets.update_group(session, 1, {
            "GroupName": "Renamed set", "MemberAssetIDs": [2, 12]})
        assert group["GroupName"] == "Renamed set"
        assert [m["AssetID"] for m in group["Members"]] == [2, 12]
        assert store.get("PhysicalAsset", 3)["GroupID"] is None

    def test_update_to_empty_rejected(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.EmptyGroup):
            assets.update_group(login("j_doe"), 1, {"MemberAssetIDs": []})

    def test_delete_is_soft_and_detaches(self, world, login):
        store, _, _, assets = world
        session = login("j_doe")
        assets.delete_group(session, 1)
        assert store.get("Group", 1)["Status"] == "inactive"
        assert store.get("PhysicalAsset", 2)["GroupID"] is None
        assert store.get("PhysicalAsset", 3)["GroupID"] is None
        # still readable, but gone for editing purposes
        assert assets.get_group(session, 1)["Status"] == "inactive"
        assert assets.get_group(session, 1)["Members"] == []
        with pytest.raises(errors.InvalidGroupId):
            assets.delete_group(session, 1)
        with pytest.raises(errors.InvalidGroupId):
            assets.update_group(session, 1, {"GroupName": "X"})

    def test_unknown_group_id(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.InvalidGroupId):
            assets.get_group(login("j_doe"), 999)

    def test_taking_the_last_member_retires_the_losing_group(self, world,
                                                             login):
        store, _, _, assets = world
        session = login("j_doe")
        solo = assets.create_group(session, {
            "LocationID": 1, "MemberAssetIDs": [4]})
        assets.create_group(session, {
            "LocationID": 1, "MemberAssetIDs": [4, 5]})
        assert store.get("Group", solo)["Status"] == "inactive"

    def test_active_groups_are_never_empty(self, world, login):
        store, _, _, assets = world
        session = login("j_doe")
        assets.create_group(session, {"LocationID": 1,
                                      "MemberAssetIDs": [4]})
        assets.update_group(session, 1, {"MemberAssetIDs": [2]})
        assets.delete_group(session, 1)
        for group in store.select("Group").items:
            if group["Status"] == "active":
                members = store.count("PhysicalAsset", [
                    Criterion("GroupID", OP_EQ, group["GroupID"])])
                assert members > 0


# ---------------------------------------------------------------------------
# report

class TestReport:
    def test_category_counts_for_admin(self, world, login):
        _, _, _, assets = world
        report = assets.asset_report(login("a_khan"), "Category")
        assert report == [("Computer", 4), ("Equipment", 2),
                          ("Furniture", 4), ("StorageUnit", 2)]

    def test_status_counts_are_scoped(self, world, login):
        _, _, _, assets = world
        report = assets.asset_report(login("r_roe"), "Status")
        assert report == [("In-stock", 1), ("In-use", 1)]

    def test_location_dimension(self, world, login):
        _, _, _, assets = world
        report = dict(assets.asset_report(login("s_chen"), "LocationID"))
        assert report == {7: 2}

    def test_counts_partition_the_visible_set(self, world, login):
        _, _, _, assets = world
        session = login("j_doe")
        _, total = assets.search_assets(session)
        for dimension in ("Category", "Status", "Owner", "LocationID"):
            report = assets.asset_report(session, dimension)
            assert sum(n for _, n in report) == total

    def test_unknown_dimension(self, world, login):
        _, _, _, assets = world
        with pytest.raises(errors.UnknownDimension):
            assets.asset_report(login("a_khan"), "Color")
