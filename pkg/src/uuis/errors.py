"""Domain error vocabulary.

Every failure the service can report is a subclass of ``UuisError`` with a
stable ``code`` and a default HTTP status.  The HTTP layer maps errors to
responses from this table alone, so adding a new failure mode means adding a
class here, nothing else.
"""
from __future__ import annotations


class UuisError(Exception):
    code = "ERROR"
    http_status = 400

    def __init__(self, message: str = "", *, field: str | None = None,
                 position: int | None = None):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.field = field
        self.position = position

    def to_dict(self) -> dict:
        body = {"code": self.code, "message": self.message}
        if self.field is not None:
            body["field"] = self.field
        if self.position is not None:
            body["position"] = self.position
        return body


# ---------------------------------------------------------------------------
# storage

class UnknownEntityKind(UuisError):
    code = "UNKNOWN_ENTITY_KIND"
    http_status = 422


class UnknownField(UuisError):
    code = "UNKNOWN_FIELD"
    http_status = 422


class NotFound(UuisError):
    code = "NOT_FOUND"
    http_status = 404


class ConstraintViolation(UuisError):
    code = "CONSTRAINT_VIOLATION"
    http_status = 422


class Conflict(UuisError):
    code = "CONFLICT"
    http_status = 409


class ParseError(UuisError):
    """A seed file or config file could not be read."""
    code = "PARSE_ERROR"
    http_status = 422


# ---------------------------------------------------------------------------
# auth and account

class MissingField(UuisError):
    code = "MISSING_FIELD"
    http_status = 422


class BadCredentials(UuisError):
    code = "BAD_CREDENTIALS"
    http_status = 401


class UnknownSession(UuisError):
    code = "UNKNOWN_SESSION"
    http_status = 401


class NotAMember(UuisError):
    code = "NOT_A_MEMBER"
    http_status = 403


class ExpiredPending(UuisError):
    code = "EXPIRED_PENDING"
    http_status = 401


class OldPasswordWrong(UuisError):
    code = "OLD_PASSWORD_WRONG"
    http_status = 403


class PasswordMismatch(UuisError):
    code = "PASSWORD_MISMATCH"
    http_status = 422


class PolicyViolation(UuisError):
    code = "POLICY_VIOLATION"
    http_status = 422


class ChallengeFailed(UuisError):
    code = "CHALLENGE_FAILED"
    http_status = 403


class FieldTooLong(UuisError):
    code = "FIELD_TOO_LONG"
    http_status = 422


class InvalidEmail(UuisError):
    code = "INVALID_EMAIL"
    http_status = 422


# ---------------------------------------------------------------------------
# permissions

class UnknownPermission(UuisError):
    code = "UNKNOWN_PERMISSION"
    http_status = 422


class Forbidden(UuisError):
    code = "FORBIDDEN"
    http_status = 403


class IncompleteMap(UuisError):
    code = "INCOMPLETE_MAP"
    http_status = 422


# ---------------------------------------------------------------------------
# assets and groups

class MissingMandatory(UuisError):
    code = "MISSING_MANDATORY"
    http_status = 422


class FacultyMismatch(UuisError):
    code = "FACULTY_MISMATCH"
    http_status = 403


class DuplicateBarCode(UuisError):
    code = "DUPLICATE_BARCODE"
    http_status = 409


class ExtensionMismatch(UuisError):
    code = "EXTENSION_MISMATCH"
    http_status = 422


class ImmutableField(UuisError):
    code = "IMMUTABLE_FIELD"
    http_status = 422


class EmptyGroup(UuisError):
    code = "EMPTY_GROUP"
    http_status = 422


class CrossFaculty(UuisError):
    code = "CROSS_FACULTY"
    http_status = 403


class InvalidAssetId(UuisError):
    code = "INVALID_ASSET_ID"
    http_status = 422


class InvalidLocationId(UuisError):
    code = "INVALID_LOCATION_ID"
    http_status = 422


class InvalidUserId(UuisError):
    code = "INVALID_USER_ID"
    http_status = 422


class InvalidGroupId(UuisError):
    code = "INVALID_GROUP_ID"
    http_status = 422


# ---------------------------------------------------------------------------
# locations

class DuplicateName(UuisError):
    code = "DUPLICATE_NAME"
    http_status = 409


class MissingProfile(UuisError):
    code = "MISSING_PROFILE"
    http_status = 422


class UnknownFloor(UuisError):
    code = "UNKNOWN_FLOOR"
    http_status = 422


class FieldNotSearchable(UuisError):
    code = "FIELD_NOT_SEARCHABLE"
    http_status = 422


class NotALab(UuisError):
    code = "NOT_A_LAB"
    http_status = 422


class AlreadyMember(UuisError):
    code = "ALREADY_MEMBER"
    http_status = 409


class CapacityExceeded(UuisError):
    code = "CAPACITY_EXCEEDED"
    http_status = 409


# ---------------------------------------------------------------------------
# software and licenses

class Duplicate(UuisError):
    code = "DUPLICATE"
    http_status = 409


class DateOrder(UuisError):
    code = "DATE_ORDER"
    http_status = 422


class NoSeatsRemaining(UuisError):
    code = "NO_SEATS_REMAINING"
    http_status = 409


class AlreadyAssigned(UuisError):
    code = "ALREADY_ASSIGNED"
    http_status = 409


class NotAComputer(UuisError):
    code = "NOT_A_COMPUTER"
    http_status = 422


class AlreadyInstalled(UuisError):
    code = "ALREADY_INSTALLED"
    http_status = 409


# ---------------------------------------------------------------------------
# change requests

class MissingDescription(UuisError):
    code = "MISSING_DESCRIPTION"
    http_status = 422


class BadCategory(UuisError):
    code = "BAD_CATEGORY"
    http_status = 422


class UnresolvedReference(UuisError):
    code = "UNRESOLVED_REFERENCE"
    http_status = 422


class EmptyNote(UuisError):
    code = "EMPTY_NOTE"
    http_status = 422


class AlreadyClosed(UuisError):
    code = "ALREADY_CLOSED"
    http_status = 409


class NotPending(UuisError):
    code = "NOT_PENDING"
    http_status = 409


class NotSpecific(UuisError):
    code = "NOT_SPECIFIC"
    http_status = 422


class NotGeneral(UuisError):
    code = "NOT_GENERAL"
    http_status = 422


class UnknownDimension(UuisError):
    code = "UNKNOWN_DIMENSION"
    http_status = 422


# ---------------------------------------------------------------------------
# query language

class QuerySyntaxError(UuisError):
    code = "QUERY_SYNTAX_ERROR"
    http_status = 422


class DepthExceeded(UuisError):
    code = "DEPTH_EXCEEDED"
    http_status = 422


class BadValueForType(UuisError):
    code = "BAD_VALUE_FOR_TYPE"
    http_status = 422


# ---------------------------------------------------------------------------
# request validation (transport layer)

class ValidationFailed(UuisError):
    code = "VALIDATION_FAILED"
    http_status = 422


def error_catalog() -> dict[str, int]:
    """Return {code: http_status} for every error class defined here."""
    table = {}
    stack = [UuisError]
    while stack:
        cls = stack.pop()
        table[cls.code] = cls.http_status
        stack.extend(cls.__subclasses__())
    return table
