from __future__ import annotations

import os
import sys
import threading
from datetime import datetime, timedelta, timezone

import pytest

from uuis import api
from uuis.app import App
from uuis.storage import FileStore, MemoryStore, load_seed

DEMO_FIXTURE = os.path.join(os.path.dirname(__file__), "..", "fixtures",
                            "demo.json")

# demo world credentials, one user per role level (and one two-department)
PASSWORDS = {
    "a_khan": "wemooki",        # level 3
    "test1": "test1pass",       # level 0
    "m_lee": "mooncake9",       # level 1
    "j_doe": "papermoon2",      # level 2, ENCS
    "r_roe": "riverstone3",     # level 2, Arts
    "v_patel": "twotowns44",    # level 1, two departments
    "s_chen": "glasshour7",     # level 1, Science
    "d_fox": "quietowl88",      # level 0, Arts
}


class FakeClock:
    def __init__(self, start: datetime | None = None):
        self.t = start or datetime(2026, 8, 19, 12, 0, 0,
                                   tzinfo=timezone.utc)

    def __call__(self) -> datetime:
        return self.t

    def tick(self, seconds: float = 0, minutes: float = 0,
             days: float = 0) -> None:
        self.t += timedelta(seconds=seconds, minutes=minutes, days=days)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Replay the acceptance verdict lines once capture is out of the way."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "VERDICTS", ()) if module else ()
    if lines:
        terminalreporter.section("acceptance checks")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(params=["memory", "file"])
def store(request, tmp_path):
    """An empty store, run once per backend."""
    if request.param == "memory":
        s = MemoryStore()
    else:
        s = FileStore(str(tmp_path / "store.json"))
    yield s
    s.close()


@pytest.fixture
def demo_store(store):
    load_seed(store, DEMO_FIXTURE)
    return store


@pytest.fixture
def fake_clock():
    return FakeClock()


@pytest.fixture
def demo_app(demo_store, fake_clock, tmp_path):
    """The demo world wired into one application object."""
    return App(demo_store, now=fake_clock,
               outbox_path=str(tmp_path / "outbox.jsonl"))


@pytest.fixture
def live_server(demo_app):
    """The demo app behind a real HTTP listener on a random port."""
    server = api.serve(demo_app, host="127.0.0.1", port=0)
    thread = threading.Thread(target=server.serve_forever,
                              kwargs={"poll_interval": 0.01}, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}", demo_app
    server.shutdown()
    server.server_close()
