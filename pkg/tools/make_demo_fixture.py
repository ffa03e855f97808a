#!/usr/bin/env python3
"""Regenerate fixtures/demo.json.

The demo world is small but covers every entity kind: four roles (levels
0 to 3) with their default grants, three faculties, six departments, users
of every level (one with two departments), buildings, floors, locations of
all four types, assets of all four categories, a group, software with
licenses, seats and installations, and a spread of requests.

Password digests are computed here, so rerunning the script refreshes the
salts.  Digest iterations are kept low for quick logins in demos and tests;
real deployments get the service default when passwords change.
"""
from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from uuis.auth import hash_password  # noqa: E402
from uuis.permissions import PERMISSION_CATALOG  # noqa: E402

ITERATIONS = 20000

PASSWORDS = {
    "a_khan": "wemooki",
    "test1": "test1pass",
    "m_lee": "mooncake9",
    "j_doe": "papermoon2",
    "r_roe": "riverstone3",
    "v_patel": "twotowns44",
    "s_chen": "glasshour7",
    "d_fox": "quietowl88",
}


def build() -> dict:
    digests = {name: hash_password(pw, ITERATIONS)
               for name, pw in PASSWORDS.items()}

    roles = [
        {"RoleID": 1, "RoleName": "Viewer", "Level": 0},
        {"RoleID": 2, "RoleName": "Department Staff", "Level": 1},
        {"RoleID": 3, "RoleName": "Faculty Manager", "Level": 2},
        {"RoleID": 4, "RoleName": "Administrator", "Level": 3},
    ]

    permissions = [{"PermissionID": i + 1, "PermissionName": name}
                   for i, name in enumerate(PERMISSION_CATALOG)]
    perm_id = {p["PermissionName"]: p["PermissionID"] for p in permissions}

    grants = []

    def grant(role_id, names):
        for name in names:
            grants.append({"GrantID": len(grants) + 1, "RoleID": role_id,
                           "PermissionID": perm_id[name], "Authorize": True})

    grant(4, PERMISSION_CATALOG)                                  # level 3
    grant(3, [p for p in PERMISSION_CATALOG                      # level 2
              if p != "admin.permissions"])
    grant(2, ["asset.search"])                                    # level 1
    # level 0 holds nothing; absence of a row already means "no"

    faculties = [
        {"FacultyID": 1, "FacultyName": "ENCS",
         "FacultyDean": "Dr. Amina Osei"},
        {"FacultyID": 2, "FacultyName": "Arts",
         "FacultyDean": "Dr. Pavel Novak"},
        {"FacultyID": 3, "FacultyName": "Science",
         "FacultyDean": "Dr. Leila Haddad"},
    ]

    departments = [
        {"DepartmentID": 1, "FacultyID": 1,
         "DepartmentName": "Computer Science"},
        {"DepartmentID": 2, "FacultyID": 1,
         "DepartmentName": "Electrical Engineering"},
        {"DepartmentID": 3, "FacultyID": 2, "DepartmentName": "History"},
        {"DepartmentID": 4, "FacultyID": 2, "DepartmentName": "Philosophy"},
        {"DepartmentID": 5, "FacultyID": 3, "DepartmentName": "Physics"},
        {"DepartmentID": 6, "FacultyID": 3, "DepartmentName": "Biology"},
    ]

    users = [
        {"UserID": 1, "RoleID": 4, "UserName": "a_khan",
         "PasswordDigest": digests["a_khan"], "FirstName": "Adeel",
         "LastName": "Khan", "Email": "a.khan@uni.example"},
        {"UserID": 2, "RoleID": 1, "UserName": "test1",
         "PasswordDigest": digests["test1"], "FirstName": "Terry",
         "LastName": "Sample", "Email": "test1@uni.example"},
        {"UserID": 3, "RoleID": 2, "UserName": "m_lee",
         "PasswordDigest": digests["m_lee"], "FirstName": "Mona",
         "LastName": "Lee", "Email": "m.lee@uni.example"},
        {"UserID": 4, "RoleID": 3, "UserName": "j_doe",
         "PasswordDigest": digests["j_doe"], "FirstName": "Jordan",
         "LastName": "Doe", "Email": "j.doe@uni.example"},
        {"UserID": 5, "RoleID": 3, "UserName": "r_roe",
         "PasswordDigest": digests["r_roe"], "FirstName": "Riley",
         "LastName": "Roe", "Email": "r.roe@uni.example"},
        {"UserID": 6, "RoleID": 2, "UserName": "v_patel",
         "PasswordDigest": digests["v_patel"], "FirstName": "Veda",
         "LastName": "Patel", "Email": "v.patel@uni.example"},
        {"UserID": 7, "RoleID": 2, "UserName": "s_chen",
         "PasswordDigest": digests["s_chen"], "FirstName": "Shu",
         "LastName": "Chen", "Email": "s.chen@uni.example"},
        {"UserID": 8, "RoleID": 1, "UserName": "d_fox",
         "PasswordDigest": digests["d_fox"], "FirstName": "Dana",
         "LastName": "Fox", "Email": "d.fox@uni.example"},
    ]

    memberships = [
        {"MembershipID": 1, "UserID": 1, "DepartmentID": 1},
        {"MembershipID": 2, "UserID": 2, "DepartmentID": 1},
        {"MembershipID": 3, "UserID": 3, "DepartmentID": 1},
        {"MembershipID": 4, "UserID": 4, "DepartmentID": 1},
        {"MembershipID": 5, "UserID": 5, "DepartmentID": 3},
        {"MembershipID": 6, "UserID": 6, "DepartmentID": 1},
        {"MembershipID": 7, "UserID": 6, "DepartmentID": 2},
        {"MembershipID": 8, "UserID": 7, "DepartmentID": 5},
        {"MembershipID": 9, "UserID": 8, "DepartmentID": 3},
    ]

    buildings = [
        {"BuildingID": 1, "BuildingName": "H", "Address": "1455 Main St",
         "City": "Montreal", "Province": "QC", "Country": "Canada",
         "ZipCode": "H3G 1M8"},
        {"BuildingID": 2, "BuildingName": "EV", "Address": "1515 Main St",
         "City": "Montreal", "Province": "QC", "Country": "Canada",
         "ZipCode": "H3G 2W1"},
        {"BuildingID": 3, "BuildingName": "LB", "Address": "1400 Main St",
         "City": "Montreal", "Province": "QC", "Country": "Canada",
         "ZipCode": "H3G 1M8"},
    ]

    floors = [
        {"FloorID": 1, "BuildingID": 1, "FloorNo": 6},
        {"FloorID": 2, "BuildingID": 1, "FloorNo": 9},
        {"FloorID": 3, "BuildingID": 2, "FloorNo": 1},
        {"FloorID": 4, "BuildingID": 2, "FloorNo": 2},
        {"FloorID": 5, "BuildingID": 3, "FloorNo": 1},
    ]

    locations = [
        {"LocationID": 1, "DepartmentID": 1, "FloorID": 1,
         "LocationName": "H-601", "Type": "Lab", "Status": "open",
         "SquareMeters": 80},
        {"LocationID": 2, "DepartmentID": 1, "FloorID": 1,
         "LocationName": "H-623", "Type": "Room", "Status": "open",
         "SquareMeters": 45},
        {"LocationID": 3, "DepartmentID": 1, "FloorID": 1,
         "LocationName": "H-625", "Type": "Room", "Status": "open",
         "SquareMeters": 45},
        {"LocationID": 4, "DepartmentID": 2, "FloorID": 3,
         "LocationName": "EV-100", "Type": "Office", "Status": "open",
         "SquareMeters": 12},
        {"LocationID": 5, "DepartmentID": 2, "FloorID": 3,
         "LocationName": "EV-110", "Type": "StorageCompartment",
         "Status": "open", "SquareMeters": 6},
        {"LocationID": 6, "DepartmentID": 3, "FloorID": 5,
         "LocationName": "LB-201", "Type": "Room", "Status": "open",
         "SquareMeters": 30},
        {"LocationID": 7, "DepartmentID": 5, "FloorID": 4,
         "LocationName": "EV-201", "Type": "Lab", "Status": "open",
         "SquareMeters": 60},
        {"LocationID": 8, "DepartmentID": 1, "FloorID": 2,
         "LocationName": "H-901", "Type": "Room", "Status": "closed",
         "SquareMeters": 20},
    ]

    labs = [
        {"LocationID": 1, "Reponsible": 4, "LabType": "Teaching",
         "Capacity": 4},
        {"LocationID": 7, "Reponsible": 7, "LabType": "Research",
         "Capacity": 2},
    ]
    lab_members = [
        {"LabMemberID": 1, "LocationID": 1, "UserID": 3},
        {"LabMemberID": 2, "LocationID": 7, "UserID": 7},
    ]
    rooms = [
        {"LocationID": 2, "RoomNo": 623},
        {"LocationID": 3, "RoomNo": 625},
        {"LocationID": 6, "RoomNo": 201},
        {"LocationID": 8, "RoomNo": 901},
    ]
    offices = [{"LocationID": 4, "OfficeNo": 100}]
    compartments = [{"LocationID": 5, "UserID": 4, "CompartmentNo": 2}]

    assets = [
        {"AssetID": 1, "LocationID": 2, "DepartmentID": 1,
         "BarCode": "BC-0001", "Owner": "ENCS", "Category": "Furniture",
         "Status": "In-stock", "Manufacturer": "Steelcase",
         "Model": "Node", "DatePurchased": "2024-09-01T00:00:00Z",
         "PoNumber": "PO-1001", "PRequest": "PR-2001"},
        {"AssetID": 2, "LocationID": 2, "DepartmentID": 1, "GroupID": 1,
         "BarCode": "BC-0002", "Owner": "ENCS", "Category": "Furniture",
         "Status": "In-use", "Manufacturer": "Steelcase", "Model": "Node"},
        {"AssetID": 3, "LocationID": 3, "DepartmentID": 1, "GroupID": 1,
         "BarCode": "BC-0003", "Owner": "ENCS", "Category": "Furniture",
         "Status": "In-use", "Model": "WorkDesk 140"},
        {"AssetID": 4, "LocationID": 1, "DepartmentID": 1,
         "BarCode": "BC-0004", "Owner": "ENCS", "Category": "Computer",
         "Status": "In-use", "Manufacturer": "Dell",
         "Model": "OptiPlex 7010", "DatePurchased": "2025-02-15T00:00:00Z",
         "WarrantyExpiration": "2028-02-15T00:00:00Z",
         "PoNumber": "PO-1002"},
        {"AssetID": 5, "LocationID": 1, "DepartmentID": 1,
         "BarCode": "BC-0005", "Owner": "ENCS", "Category": "Computer",
         "Status": "In-stock", "Manufacturer": "Lenovo",
         "Model": "ThinkPad T14"},
        {"AssetID": 6, "LocationID": 5, "DepartmentID": 2,
         "BarCode": "BC-0006", "Owner": "ENCS", "Category": "StorageUnit",
         "Status": "In-stock", "Model": "C4 Cabinet"},
        {"AssetID": 7, "LocationID": 4, "DepartmentID": 2,
         "BarCode": "BC-0007", "Owner": "ENCS", "Category": "Equipment",
         "Status": "In-use", "Manufacturer": "Epson", "Model": "EB-2250U"},
        {"AssetID": 8, "LocationID": 6, "DepartmentID": 3,
         "BarCode": "BC-0008", "Owner": "Arts", "Category": "Furniture",
         "Status": "In-stock", "Model": "Billy 80"},
        {"AssetID": 9, "LocationID": 6, "DepartmentID": 3,
         "BarCode": "BC-0009", "Owner": "Arts", "Category": "Computer",
         "Status": "In-use", "Manufacturer": "HP", "Model": "EliteDesk"},
        {"AssetID": 10, "LocationID": 7, "DepartmentID": 5,
         "BarCode": "BC-0010", "Owner": "Science", "Category": "Equipment",
         "Status": "Broken", "Manufacturer": "Tektronix",
         "Model": "TBS1052C"},
        {"AssetID": 11, "LocationID": 7, "DepartmentID": 5,
         "BarCode": "BC-0011", "Owner": "Science", "Category": "Computer",
         "Status": "In-use", "Manufacturer": "Dell", "Model": "Precision"},
        {"AssetID": 12, "LocationID": 8, "DepartmentID": 1,
         "BarCode": "BC-0012", "Owner": "ENCS", "Category": "StorageUnit",
         "Status": "In-stock", "Model": "ShelfRack 2m"},
    ]

    furniture = [
        {"AssetID": 1, "Type": "Plastic Classroom Chair",
         "Dimension": "90x45x45", "Color": "Blue", "Finish": "Matte"},
        {"AssetID": 2, "Type": "Plastic Classroom Chair",
         "Dimension": "90x45x45", "Color": "Blue", "Finish": "Matte"},
        {"AssetID": 3, "Type": "Desk", "Dimension": "75x140x70",
         "Color": "Oak", "Finish": "Laminate"},
        {"AssetID": 6, "Type": "Cabinet", "Dimension": "180x90x45",
         "Color": "Grey", "Finish": "Powder coat"},
        {"AssetID": 8, "Type": "Bookshelf", "Dimension": "202x80x28",
         "Color": "White"},
        {"AssetID": 12, "Type": "Shelf rack", "Dimension": "200x100x50",
         "Color": "Grey"},
    ]
    storage_units = [
        {"AssetID": 6, "Type": "Cabinet", "NumberOfCompartment": 4},
        {"AssetID": 12, "Type": "Open rack", "NumberOfCompartment": 1},
    ]
    equipment = [
        {"AssetID": 4, "Type": "Workstation", "UserID": 3,
         "SerialNo": "SN-100"},
        {"AssetID": 5, "Type": "Laptop", "SerialNo": "SN-101"},
        {"AssetID": 7, "Type": "Projector", "SerialNo": "SN-200"},
        {"AssetID": 9, "Type": "Workstation", "SerialNo": "SN-201"},
        {"AssetID": 10, "Type": "Oscilloscope", "SerialNo": "SN-300"},
        {"AssetID": 11, "Type": "Workstation", "UserID": 7,
         "SerialNo": "SN-301"},
    ]
    computers = [
        {"AssetID": 4, "Type": "Desktop", "Processor": "Core i7-13700",
         "MACAddress": "00:1A:2B:3C:4D:5E", "HardDriveCap": "1TB",
         "ROM": "UEFI 2.8", "RAM": "16GB"},
        {"AssetID": 5, "Type": "Laptop", "Processor": "Ryzen 7 7840U",
         "MACAddress": "00:1A:2B:3C:4D:5F", "HardDriveCap": "512GB",
         "RAM": "32GB"},
        {"AssetID": 9, "Type": "Desktop", "Processor": "Core i5-12500",
         "MACAddress": "8C:16:45:2A:BB:01", "HardDriveCap": "512GB",
         "RAM": "8GB"},
        {"AssetID": 11, "Type": "Desktop", "Processor": "Xeon W-2245",
         "MACAddress": "8C:16:45:2A:BB:02", "HardDriveCap": "2TB",
         "RAM": "64GB"},
    ]

    groups = [
        {"GroupID": 1, "UserID": 4, "LocationID": 2,
         "GroupName": "Classroom 623 set", "Status": "active"},
    ]

    parameters = [
        {"ParameterID": 1, "AssetID": 4, "ParameterName": "Video Card",
         "Value": "RTX A2000"},
    ]

    software = [
        {"SoftwareID": 1, "Name": "AutoCAD", "Version": "2025",
         "VendorID": "ADSK", "VendorName": "Autodesk", "Category": "CAD",
         "Media": "download"},
        {"SoftwareID": 2, "Name": "MATLAB", "Version": "R2025a",
         "VendorID": "MW", "VendorName": "MathWorks", "Category": "Math",
         "Media": "download"},
        {"SoftwareID": 3, "Name": "LibreOffice", "Version": "7.6",
         "Category": "Office", "Media": "download"},
    ]

    licenses = [
        {"LicenseID": 1, "SoftwareID": 1, "DepartmentID": 1, "UserID": 4,
         "Key": "ACAD-2025-0001", "DatePurchased": "2026-01-10T00:00:00Z",
         "PoNumber": "PO-1101", "Type": "Seat",
         "ExpirationDate": "2026-09-15T00:00:00Z", "SeatCount": 3},
        {"LicenseID": 2, "SoftwareID": 2, "DepartmentID": 1, "UserID": 4,
         "Key": "ML-2025-0001", "DatePurchased": "2025-07-01T00:00:00Z",
         "Type": "Seat", "ExpirationDate": "2026-07-01T00:00:00Z",
         "SeatCount": 2},
        {"LicenseID": 3, "SoftwareID": 2, "DepartmentID": 5, "UserID": 7,
         "Key": "ML-2026-0002", "DatePurchased": "2026-03-05T00:00:00Z",
         "PoNumber": "PO-1102", "Type": "Network",
         "ExpirationDate": "2027-03-05T00:00:00Z", "SeatCount": 5},
    ]

    seats = [
        {"AssignmentID": 1, "LicenseID": 1, "UserID": 3},
        {"AssignmentID": 2, "LicenseID": 1, "UserID": 4},
        {"AssignmentID": 3, "LicenseID": 2, "UserID": 3},
    ]

    installs = [
        {"InstallationID": 1, "LicenseID": 1, "AssetID": 4},
    ]

    requests = [
        {"RequestID": 1, "UserID": 2, "Kind": "General",
         "Category": "Technical", "Description": "Broken chair in H-623",
         "Status": "Pending"},
        {"RequestID": 2, "UserID": 3, "Kind": "General",
         "Category": "Technical", "Description": "Need MATLAB on lab PCs",
         "Status": "Closed", "ApproverID": 4,
         "ClosureNote": "Installed on the lab image"},
        {"RequestID": 3, "UserID": 4, "Kind": "General",
         "Category": "Administrative",
         "Description": "New TA account for fall",
         "Status": "Closed", "ApproverID": 1,
         "ClosureNote": "Account created"},
        {"RequestID": 4, "UserID": 8, "Kind": "General",
         "Category": "Administrative",
         "Description": "Reading room door squeaks",
         "Status": "Pending"},
        {"RequestID": 5, "UserID": 4, "Kind": "Specific",
         "Category": "MoveAsset", "Description": "Move desk to H-625",
         "Status": "Pending", "BarCode": "BC-0003",
         "LocationName": "H-625"},
        {"RequestID": 6, "UserID": 7, "Kind": "General",
         "Category": "Technical", "Description": "Oscilloscope repair",
         "Status": "Pending"},
        {"RequestID": 7, "UserID": 3, "Kind": "Specific",
         "Category": "AssignAsset", "Description": "Assign spare laptop",
         "Status": "Approved", "ApproverID": 4, "BarCode": "BC-0005",
         "UserName": "m_lee"},
        {"RequestID": 8, "UserID": 2, "Kind": "General",
         "Category": "Technical", "Description": "Replace desk lamp",
         "Status": "Closed", "ApproverID": 4,
         "ClosureNote": "Lamp replaced"},
        {"RequestID": 9, "UserID": 8, "Kind": "Specific",
         "Category": "ReserveCompartment",
         "Description": "Locker for course binders",
         "Status": "Pending", "LocationName": "EV-110",
         "CompartmentNo": 1},
    ]

    log = [
        {"LogID": 1, "UserID": 1, "LoginDate": "2026-08-01T09:00:00Z",
         "LogoutDate": "2026-08-01T09:30:00Z"},
    ]

    return {
        "Role": roles,
        "Permission": permissions,
        "RoleGrant": grants,
        "Faculty": faculties,
        "Department": departments,
        "User": users,
        "Membership": memberships,
        "LogEntry": log,
        "Building": buildings,
        "Floor": floors,
        "Location": locations,
        "Lab": labs,
        "LabMember": lab_members,
        "Room": rooms,
        "Office": offices,
        "StorageCompartment": compartments,
        "PhysicalAsset": assets,
        "Furniture": furniture,
        "StorageUnit": storage_units,
        "Equipment": equipment,
        "Computer": computers,
        "Group": groups,
        "AdditionalParameter": parameters,
        "Software": software,
        "License": licenses,
        "SeatAssignment": seats,
        "Installation": installs,
        "Request": requests,
    }


def main() -> None:
    out = os.path.join(os.path.dirname(__file__), "..", "fixtures",
                       "demo.json")
    data = build()
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
    print(f"wrote {os.path.normpath(out)} "
          f"({sum(len(v) for v in data.values())} rows)")


if __name__ == "__main__":
    main()
