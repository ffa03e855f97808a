"""Time helpers.

Services take an injectable ``now`` callable so tests can freeze or step
time; everything is stored as ISO-8601 UTC with a Z suffix, which keeps
string comparison and chronological order in agreement.
"""
from __future__ import annotations

from datetime import date, datetime, timezone


def now_utc() -> datetime:
    return datetime.now(timezone.utc)


def to_iso(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def from_iso(text: str) -> datetime:
    return datetime.strptime(text, "%Y-%m-%dT%H:%M:%SZ").replace(
        tzinfo=timezone.utc)


def parse_day(text: str) -> date:
    return date.fromisoformat(text)


def day_of(text: str) -> date:
    """Calendar day of a stored timestamp or bare date string."""
    return date.fromisoformat(text[:10])
