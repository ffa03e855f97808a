"""Login sessions, passwords and account upkeep.

Sessions are opaque 128-bit tokens held server-side with a sliding
30-minute idle timeout.  Logging in opens a LogEntry row; logging out (a
two-step flow: ask, then confirm with a one-shot token) or timing out
closes it, so an open session always has exactly one open log row.

Passwords are stored as salted PBKDF2 digests in a self-describing string,
so the work factor can change without rehashing existing rows.  Password
reset never reveals whether an account exists: the caller first solves a
small arithmetic challenge, then the service always reports success and
appends mail to an outbox file only when the account is real.
"""
from __future__ import annotations

import hashlib
import hmac
import json
import os
import random
import secrets
import threading
from dataclasses import dataclass, field as dc_field
from datetime import datetime

from . import clock, directory
from .errors import (
    BadCredentials,
    ChallengeFailed,
    ExpiredPending,
    FieldTooLong,
    InvalidEmail,
    MissingField,
    NotAMember,
    OldPasswordWrong,
    PasswordMismatch,
    PolicyViolation,
    UnknownField,
    UnknownSession,
)
from .storage import Criterion, Mutation, OP_EQ

PASSWORD_MIN = 8
PASSWORD_MAX = 32
IDLE_TIMEOUT_SECONDS = 30 * 60
PENDING_TTL_SECONDS = 5 * 60
RESET_TTL_SECONDS = 15 * 60
DEFAULT_ITERATIONS = 60000

LOCALES = ("en", "fr")


# ---------------------------------------------------------------------------
# password digests

def hash_password(password: str, iterations: int = DEFAULT_ITERATIONS) -> str:
    salt = secrets.token_hex(16)
    digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"),
                                 bytes.fromhex(salt), iterations)
    return f"pbkdf2_sha256${iterations}${salt}${digest.hex()}"


def check_password(password: str, stored: str) -> bool:
    try:
        scheme, iterations, salt, expected = stored.split("$")
        if scheme != "pbkdf2_sha256":
            return False
        digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"),
                                     bytes.fromhex(salt), int(iterations))
        return hmac.compare_digest(digest.hex(), expected)
    except (ValueError, TypeError):
        return False


# ---------------------------------------------------------------------------
# session state

@dataclass
class Session:
    token: str
    user_id: int
    role_id: int | None
    department_id: int | None
    log_id: int | None
    last_seen: datetime
    locale: str = "en"
    confirm_token: str | None = None


@dataclass
class PendingChoice:
    """Login parked until the user picks one of their departments."""
    token: str
    user_id: int
    department_ids: tuple[int, ...]
    created: datetime


@dataclass
class _ResetToken:
    user_id: int
    issued: datetime
    used: bool = False


@dataclass
class _Challenge:
    answer: int
    created: datetime


# ---------------------------------------------------------------------------
# menu

@dataclass(frozen=True)
class MenuEntry:
    menu_id: int
    name: str
    address: str
    permission: str | None


MENU = (
    MenuEntry(1, "Assets Inventory", "/assets", "asset.search"),
    MenuEntry(2, "Add Asset", "/assets", "asset.add"),
    MenuEntry(3, "Asset Reports", "/assets/report", "asset.search"),
    MenuEntry(4, "Create Group", "/groups", "group.create"),
    MenuEntry(5, "Manage Groups", "/groups", "group.edit"),
    MenuEntry(6, "Space Inventory", "/locations", None),
    MenuEntry(7, "Add Location", "/locations", "location.add"),
    MenuEntry(8, "Add Building", "/buildings", "location.add"),
    MenuEntry(9, "Lab Staffing", "/locations/{id}/members", "lab.assign"),
    MenuEntry(10, "Software Inventory", "/software", None),
    MenuEntry(11, "Add Software", "/software", "software.add"),
    MenuEntry(12, "Expiring Licenses", "/licenses/expiring", "software.edit"),
    MenuEntry(13, "Requests", "/requests", None),
    MenuEntry(14, "System Admin", "/admin/roles/{id}/grants",
              "admin.permissions"),
)


class AuthService:
    def __init__(self, store, permissions, *, now=None,
                 outbox_path: str | None = None, default_locale: str = "en"):
        self.store = store
        self.permissions = permissions
        self.now = now or clock.now_utc
        self.outbox_path = outbox_path
        self.default_locale = default_locale
        self._sessions: dict[str, Session] = {}
        self._pending: dict[str, PendingChoice] = {}
        self._resets: dict[str, _ResetToken] = {}
        self._challenges: dict[str, _Challenge] = {}
        self._rng = random.Random()
        self._lock = threading.Lock()

    # -- login / logout -------------------------------------------------------

    def login(self, username: str, password: str) -> Session | PendingChoice:
        if not username or not password:
            raise MissingField("username and password are both required")
        user = directory.user_by_name(self.store, username)
        if user is None or not check_password(password,
                                              user["PasswordDigest"]):
            # a wrong name and a wrong password read the same to the caller
            raise BadCredentials("unknown user name or bad password")
        departments = directory.membership_departments(self.store,
                                                       user["UserID"])
        if len(departments) > 1:
            pending = PendingChoice(
                token=secrets.token_hex(16), user_id=user["UserID"],
                department_ids=tuple(d["DepartmentID"] for d in departments),
                created=self.now())
            with self._lock:
                self._pending[pending.token] = pending
            return pending
        department_id = departments[0]["DepartmentID"] if departments else None
        return self._open_session(user, department_id)

    def choose_department(self, pending_token: str,
                          department_id: int) -> Session:
        with self._lock:
            pending = self._pending.pop(pending_token, None)
        if pending is None:
            raise UnknownSession("no login waiting on that token")
        age = (self.now() - pending.created).total_seconds()
        if age > PENDING_TTL_SECONDS:
            raise ExpiredPending("department choice took too long; "
                                 "log in again")
        if department_id not in pending.department_ids:
            raise NotAMember("you do not belong to that department")
        user = directory.get_user(self.store, pending.user_id)
        return self._open_session(user, department_id)

    def _open_session(self, user: dict, department_id: int | None) -> Session:
        log_id = self.store.apply([Mutation.insert(
            "LogEntry", UserID=user["UserID"],
            LoginDate=clock.to_iso(self.now()))])[0]
        session = Session(
            token=secrets.token_hex(16), user_id=user["UserID"],
            role_id=user["RoleID"], department_id=department_id,
            log_id=log_id, last_seen=self.now(),
            locale=self.default_locale)
        with self._lock:
            self._sessions[session.token] = session
        return session

    def resolve(self, token: str) -> Session:
        """Look up a live session, enforcing the sliding idle timeout."""
        with self._lock:
            session = self._sessions.get(token)
        if session is None:
            raise UnknownSession("no such session")
        idle = (self.now() - session.last_seen).total_seconds()
        if idle > IDLE_TIMEOUT_SECONDS:
            self._close_session(session)
            raise UnknownSession("session timed out")
        session.last_seen = self.now()
        return session

    def logout(self, token: str) -> str:
        """First step: hand back a one-shot confirmation token."""
        session = self.resolve(token)
        session.confirm_token = secrets.token_hex(8)
        return session.confirm_token

    def logout_confirm(self, token: str, confirm_token: str) -> None:
        session = self.resolve(token)
        if not confirm_token or session.confirm_token != confirm_token:
            raise UnknownSession("confirmation token does not match")
        self._close_session(session)

    def _close_session(self, session: Session) -> None:
        with self._lock:
            self._sessions.pop(session.token, None)
        if session.log_id is not None:
            self.store.apply([Mutation.update(
                "LogEntry", session.log_id,
                {"LogoutDate": clock.to_iso(self.now())})])

    def open_system_session(self) -> Session:
        """Local session for command-line administration.

        It bypasses role lookup (role_id None verifies as allowed) and
        writes no log row; it never traverses the network interface.
        """
        return Session(token="system", user_id=0, role_id=None,
                       department_id=None, log_id=None,
                       last_seen=self.now())

    # -- password upkeep ------------------------------------------------------

    def change_password(self, session: Session, old: str, new: str,
                        confirm: str) -> None:
        if not old or not new or not confirm:
            raise MissingField("all three password fields are required")
        user = directory.get_user(self.store, session.user_id)
        if not check_password(old, user["PasswordDigest"]):
            raise OldPasswordWrong("current password does not match")
        if new != confirm:
            raise PasswordMismatch("new passwords differ")
        self._check_policy(new)
        self.store.apply([Mutation.update(
            "User", user["UserID"],
            {"PasswordDigest": hash_password(new)})])

    def _check_policy(self, password: str) -> None:
        if not (PASSWORD_MIN <= len(password) <= PASSWORD_MAX):
            raise PolicyViolation(
                f"passwords take {PASSWORD_MIN} to {PASSWORD_MAX} characters")

    # -- password reset -------------------------------------------------------

    def begin_reset(self) -> tuple[str, str]:
        """Hand out a human check; returns (challenge id, question)."""
        a, b = self._rng.randint(2, 19), self._rng.randint(2, 19)
        challenge_id = secrets.token_hex(8)
        with self._lock:
            self._challenges[challenge_id] = _Challenge(a + b, self.now())
        return challenge_id, f"What is {a} + {b}?"

    def request_reset(self, challenge_id: str, answer: str,
                      identity: str) -> None:
        """Consume the challenge and, when the account exists, mail a
        single-use reset token.  The outcome looks the same either way."""
        with self._lock:
            challenge = self._challenges.pop(challenge_id, None)
        if challenge is None:
            raise ChallengeFailed("challenge expired or unknown")
        age = (self.now() - challenge.created).total_seconds()
        if age > PENDING_TTL_SECONDS:
            raise ChallengeFailed("challenge expired or unknown")
        try:
            given = int(str(answer).strip())
        except (ValueError, TypeError):
            raise ChallengeFailed("that is not the right answer")
        if given != challenge.answer:
            raise ChallengeFailed("that is not the right answer")
        if not identity:
            raise MissingField("say who the reset is for")
        user = directory.user_by_name(self.store, identity)
        if user is None:
            users = self.store.select("User", [
                Criterion("Email", OP_EQ, identity)]).items
            user = users[0] if users else None
        if user is None:
            return
        token = secrets.token_hex(16)
        with self._lock:
            self._resets[token] = _ResetToken(user["UserID"], self.now())
        self._append_outbox({
            "to": user.get("Email") or user["UserName"],
            "subject": "Password reset",
            "token": token,
            "issued_at": clock.to_iso(self.now()),
        })

    def complete_reset(self, token: str, new_password: str) -> None:
        with self._lock:
            reset = self._resets.get(token)
            if reset is not None and not reset.used:
                age = (self.now() - reset.issued).total_seconds()
                if age <= RESET_TTL_SECONDS:
                    reset.used = True
                else:
                    reset = None
            else:
                reset = None
        if reset is None:
            raise BadCredentials("reset token is not valid")
        self._check_policy(new_password)
        self.store.apply([Mutation.update(
            "User", reset.user_id,
            {"PasswordDigest": hash_password(new_password)})])

    def _append_outbox(self, message: dict) -> None:
        if self.outbox_path is None:
            return
        os.makedirs(os.path.dirname(os.path.abspath(self.outbox_path)),
                    exist_ok=True)
        with open(self.outbox_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(message, sort_keys=True) + "\n")

    # -- account --------------------------------------------------------------

    def view_account(self, session: Session) -> dict:
        user = directory.get_user(self.store, session.user_id)
        role = self.store.get("Role", user["RoleID"])
        departments = directory.membership_departments(self.store,
                                                       user["UserID"])
        return {
            "UserName": user["UserName"],
            "FirstName": user.get("FirstName"),
            "LastName": user.get("LastName"),
            "Email": user.get("Email"),
            "RoleName": role.get("RoleName") if role else None,
            "Departments": [d["DepartmentName"] for d in departments],
        }

    def update_account(self, session: Session, changes: dict) -> dict:
        allowed = ("FirstName", "LastName", "Email")
        for key in changes:
            if key not in allowed:
                raise UnknownField(f"{key!r} is not an account field",
                                   field=key)
        cleaned = {}
        for key, value in changes.items():
            if value is None:
                cleaned[key] = None
                continue
            if not isinstance(value, str):
                raise UnknownField(f"{key} must be text", field=key)
            if len(value) > 64:
                raise FieldTooLong(f"{key} is capped at 64 characters",
                                   field=key)
            cleaned[key] = value
        email = cleaned.get("Email")
        if email:
            local, _, domain = email.partition("@")
            if not local or not domain or "@" in domain:
                raise InvalidEmail("email needs one @ with text both sides",
                                   field="Email")
        if cleaned:
            self.store.apply([Mutation.update("User", session.user_id,
                                              cleaned)])
        return self.view_account(session)

    # -- menu -----------------------------------------------------------------

    def list_menu(self, session: Session) -> list[dict]:
        """Menu entries the session's role may open, in menu order."""
        items = []
        for entry in MENU:
            if entry.permission is not None and not self.permissions.verify(
                    session.role_id, entry.permission):
                continue
            items.append({"MenuId": entry.menu_id, "MenuName": entry.name,
                          "MenuAddress": entry.address})
        return items

    def set_locale(self, session: Session, locale: str) -> None:
        if locale not in LOCALES:
            raise UnknownField(f"unsupported locale {locale!r}",
                               field="locale")
        session.locale = locale
