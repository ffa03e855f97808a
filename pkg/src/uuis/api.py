"""HTTP interface: JSON over WSGI, standard library only.

Every route takes and returns JSON.  Failures come back as
{"error": {"code", "message", "field"?, "position"?}} with the status the
error class carries.  Sessions ride in the uuis_session cookie (HttpOnly);
the login response also returns the raw token so non-browser clients can
send it in the X-Session-Token header instead.

The gate in front of the handlers rejects undeclared parameters, bodies
that are not JSON objects, and text containing control characters other
than newline.  Accepted values reach the services unmodified.
"""
from __future__ import annotations

import json
import re
import socketserver
import sys
import traceback
from dataclasses import dataclass, field
from http import HTTPStatus
from http.cookies import SimpleCookie
from urllib.parse import parse_qs

from . import errors
from .app import App
from .auth import PendingChoice
from .query import parse as parse_query

SESSION_COOKIE = "uuis_session"
TEXT_CAP = 1024
PAGE_DEFAULT = 50
PAGE_MAX = 500

PAGING = ("offset", "limit")


# ---------------------------------------------------------------------------
# input vetting

def _check_text(value: str, name: str) -> None:
    if len(value) > TEXT_CAP:
        raise errors.ValidationFailed(
            f"{name} is longer than {TEXT_CAP} characters", field=name)
    for ch in value:
        code = ord(ch)
        if (code < 32 and ch != "\n") or code == 127:
            raise errors.ValidationFailed(
                f"{name} contains control characters", field=name)


def _vet_value(value, name: str) -> None:
    if isinstance(value, str):
        _check_text(value, name)
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _vet_value(item, f"{name}[{i}]")
    elif isinstance(value, dict):
        for key, item in value.items():
            if not isinstance(key, str):
                raise errors.ValidationFailed(
                    f"{name} has a non-text key", field=name)
            _vet_value(item, f"{name}.{key}")


def _vet_body(body: dict, allowed) -> None:
    for key, value in body.items():
        if allowed != "*" and key not in allowed:
            raise errors.ValidationFailed(
                f"unexpected body field {key!r}", field=key)
        _vet_value(value, key)


def _vet_query(query: dict, allowed) -> None:
    for key, values in query.items():
        if allowed != "*" and key not in allowed:
            raise errors.ValidationFailed(
                f"unexpected query parameter {key!r}", field=key)
        for value in values:
            _check_text(value, key)


def _first(query: dict, name: str, default=None):
    values = query.get(name)
    return values[0] if values else default


def _int_param(raw, name: str, default=None, minimum=None, maximum=None):
    if raw is None:
        if default is None:
            raise errors.ValidationFailed(f"{name} is required", field=name)
        value = default
    else:
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise errors.ValidationFailed(f"{name} must be an integer",
                                          field=name)
    if minimum is not None and value < minimum:
        raise errors.ValidationFailed(f"{name} must be at least {minimum}",
                                      field=name)
    if maximum is not None and value > maximum:
        raise errors.ValidationFailed(f"{name} is capped at {maximum}",
                                      field=name)
    return value


def _paging(query: dict) -> tuple[int, int]:
    offset = _int_param(_first(query, "offset"), "offset", default=0,
                        minimum=0)
    limit = _int_param(_first(query, "limit"), "limit",
                       default=PAGE_DEFAULT, minimum=1, maximum=PAGE_MAX)
    return offset, limit


def _body_int(body: dict, name: str, required=True):
    value = body.get(name)
    if value is None:
        if required:
            raise errors.ValidationFailed(f"{name} is required", field=name)
        return None
    if not isinstance(value, int) or isinstance(value, bool):
        raise errors.ValidationFailed(f"{name} must be an integer",
                                      field=name)
    return value


def _page(items, offset, total) -> dict:
    return {"items": items, "offset": offset, "total": total}


# ---------------------------------------------------------------------------
# plumbing

@dataclass
class Ctx:
    app: App
    token: str | None
    session: object
    body: dict
    query: dict
    path: dict
    extra_headers: list = field(default_factory=list)
    status: int = 200

    def set_session_cookie(self, token: str) -> None:
        self.extra_headers.append((
            "Set-Cookie",
            f"{SESSION_COOKIE}={token}; Path=/; HttpOnly; SameSite=Lax"))

    def clear_session_cookie(self) -> None:
        self.extra_headers.append((
            "Set-Cookie", f"{SESSION_COOKIE}=; Path=/; Max-Age=0"))


@dataclass(frozen=True)
class Raw:
    """Non-JSON handler result (the CSV report download)."""
    content_type: str
    text: str


def _compile(template: str) -> re.Pattern:
    pattern = re.sub(r"\{(\w+)\}", r"(?P<\1>\\d+)", template)
    return re.compile(f"^{pattern}$")


# method, path, handler name, allowed body keys, allowed query keys,
# needs a session
_ROUTES = [
    ("GET", "/health", "health", None, (), False),

    ("POST", "/auth/login", "login",
     ("username", "password"), (), False),
    ("POST", "/auth/choose-department", "choose_department",
     ("pending_token", "department_id"), (), False),
    ("POST", "/auth/logout", "logout", (), (), True),
    ("POST", "/auth/logout/confirm", "logout_confirm",
     ("confirm_token",), (), True),
    ("POST", "/auth/password", "change_password",
     ("old", "new", "confirm"), (), True),
    ("POST", "/auth/reset/begin", "reset_begin", (), (), False),
    ("POST", "/auth/reset/request", "reset_request",
     ("challenge_id", "answer", "identity"), (), False),
    ("POST", "/auth/reset/complete", "reset_complete",
     ("token", "new_password"), (), False),

    ("GET", "/menu", "menu", None, (), True),
    ("GET", "/account", "account_view", None, (), True),
    ("PUT", "/account", "account_update",
     ("FirstName", "LastName", "Email"), (), True),
    ("PUT", "/account/locale", "set_locale", ("locale",), (), True),

    ("GET", "/assets/report", "asset_report", None,
     ("group_by", "format"), True),
    ("GET", "/assets", "asset_search", None, ("q",) + PAGING, True),
    ("POST", "/assets", "asset_add", "*", (), True),
    ("GET", "/assets/{asset_id}", "asset_get", None, (), True),
    ("PUT", "/assets/{asset_id}", "asset_update", "*", (), True),
    ("PUT", "/assets/{asset_id}/parameters", "asset_parameter",
     ("ParameterName", "Value"), (), True),

    ("GET", "/groups", "group_list", None, PAGING, True),
    ("POST", "/groups", "group_create", "*", (), True),
    ("GET", "/groups/{group_id}", "group_get", None, (), True),
    ("PUT", "/groups/{group_id}", "group_update", "*", (), True),
    ("DELETE", "/groups/{group_id}", "group_delete", None, (), True),

    ("GET", "/buildings", "building_list", None, (), True),
    ("POST", "/buildings", "building_create", "*", (), True),
    ("GET", "/locations/fields", "location_fields", None, (), True),
    ("GET", "/locations", "location_search", None, "*", True),
    ("POST", "/locations", "location_add", "*", (), True),
    ("GET", "/locations/{location_id}", "location_get", None, (), True),
    ("PUT", "/locations/{location_id}", "location_edit", "*", (), True),
    ("POST", "/locations/{location_id}/responsible",
     "lab_responsible", ("UserID",), (), True),
    ("POST", "/locations/{location_id}/members",
     "lab_member", ("UserID",), (), True),

    ("GET", "/software", "software_search", None, "*", True),
    ("POST", "/software", "software_add", "*", (), True),
    ("GET", "/software/{software_id}", "software_get", None, (), True),
    ("PUT", "/software/{software_id}", "software_edit", "*", (), True),
    ("POST", "/software/{software_id}/licenses", "license_add",
     "*", (), True),
    ("GET", "/licenses/expiring", "license_expiring", None,
     ("days", "as_of"), True),
    ("GET", "/licenses/{license_id}", "license_get", None, (), True),
    ("POST", "/licenses/{license_id}/assign", "license_assign",
     ("UserID",), (), True),
    ("POST", "/licenses/{license_id}/install", "license_install",
     ("AssetID",), (), True),

    ("POST", "/requests/general", "request_general",
     ("Category", "Description"), (), True),
    ("POST", "/requests/specific", "request_specific",
     ("Category", "Description", "BarCode", "LocationName", "GroupID",
      "UserName", "CompartmentNo"), (), True),
    ("GET", "/requests", "request_search", None,
     ("status", "category", "originator_username",
      "originator_department", "originator_faculty") + PAGING, True),
    ("GET", "/requests/{request_id}", "request_get", None, (), True),
    ("POST", "/requests/{request_id}/close", "request_close",
     ("Note",), (), True),
    ("POST", "/requests/{request_id}/approve", "request_approve",
     (), (), True),

    ("GET", "/admin/roles/{role_id}/grants", "grants_view",
     None, (), True),
    ("PUT", "/admin/roles/{role_id}/grants", "grants_update",
     ("grants", "permission", "authorize"), (), True),
]


class JsonApi:
    """WSGI application wrapping one App."""

    def __init__(self, app: App):
        self.app = app
        self.routes = [
            (method, _compile(path), getattr(self, handler), body_keys,
             query_keys, needs_session)
            for method, path, handler, body_keys, query_keys,
            needs_session in _ROUTES]

    # -- wsgi entry ------------------------------------------------------

    def __call__(self, environ, start_response):
        try:
            status, payload, headers = self._dispatch(environ)
        except errors.UuisError as err:
            status = err.http_status
            payload, headers = {"error": err.to_dict()}, []
        except Exception:
            stream = environ.get("wsgi.errors") or sys.stderr
            traceback.print_exc(file=stream)
            status = 500
            payload = {"error": {"code": "INTERNAL",
                                 "message": "unexpected server error"}}
            headers = []
        if isinstance(payload, Raw):
            body = payload.text.encode("utf-8")
            content_type = payload.content_type
        else:
            body = json.dumps(payload).encode("utf-8")
            content_type = "application/json; charset=utf-8"
        start_response(
            f"{status} {HTTPStatus(status).phrase}",
            [("Content-Type", content_type),
             ("Content-Length", str(len(body)))] + headers)
        return [body]

    def _dispatch(self, environ):
        method = environ["REQUEST_METHOD"].upper()
        path = environ.get("PATH_INFO") or "/"
        matched_other_method = False
        for route_method, pattern, handler, body_keys, query_keys, \
                needs_session in self.routes:
            match = pattern.match(path)
            if match is None:
                continue
            if route_method != method:
                matched_other_method = True
                continue
            return self._run(environ, match, handler, body_keys,
                             query_keys, needs_session)
        if matched_other_method:
            return 405, {"error": {
                "code": "METHOD_NOT_ALLOWED",
                "message": f"{method} is not supported here"}}, []
        raise errors.NotFound(f"no such resource: {path}")

    def _run(self, environ, match, handler, body_keys, query_keys,
             needs_session):
        query = parse_qs(environ.get("QUERY_STRING", ""),
                         keep_blank_values=True)
        _vet_query(query, query_keys)
        body = {}
        if body_keys is not None:
            body = _read_json(environ)
            _vet_body(body, body_keys)
        token = self._session_token(environ)
        session = None
        if needs_session:
            if not token:
                raise errors.UnknownSession("not signed in")
            session = self.app.auth.resolve(token)
        path_params = {k: int(v) for k, v in match.groupdict().items()}
        ctx = Ctx(app=self.app, token=token, session=session, body=body,
                  query=query, path=path_params)
        payload = handler(ctx)
        return ctx.status, payload, ctx.extra_headers

    def _session_token(self, environ) -> str | None:
        header = environ.get("HTTP_X_SESSION_TOKEN")
        if header:
            return header
        cookie = SimpleCookie(environ.get("HTTP_COOKIE", ""))
        morsel = cookie.get(SESSION_COOKIE)
        return morsel.value if morsel else None

    # -- misc --------------------------------------------------------------

    def health(self, ctx: Ctx) -> dict:
        return {"status": "ok"}

    # -- auth ----------------------------------------------------------------

    def login(self, ctx: Ctx) -> dict:
        result = ctx.app.auth.login(ctx.body.get("username"),
                                    ctx.body.get("password"))
        if isinstance(result, PendingChoice):
            return {"choice_required": True,
                    "pending_token": result.token,
                    "department_ids": list(result.department_ids)}
        ctx.set_session_cookie(result.token)
        return {"choice_required": False, "token": result.token}

    def choose_department(self, ctx: Ctx) -> dict:
        session = ctx.app.auth.choose_department(
            ctx.body.get("pending_token"),
            _body_int(ctx.body, "department_id"))
        ctx.set_session_cookie(session.token)
        return {"choice_required": False, "token": session.token}

    def logout(self, ctx: Ctx) -> dict:
        return {"confirm_token": ctx.app.auth.logout(ctx.token)}

    def logout_confirm(self, ctx: Ctx) -> dict:
        ctx.app.auth.logout_confirm(ctx.token,
                                    ctx.body.get("confirm_token"))
        ctx.clear_session_cookie()
        return {}

    def change_password(self, ctx: Ctx) -> dict:
        ctx.app.auth.change_password(ctx.session, ctx.body.get("old"),
                                     ctx.body.get("new"),
                                     ctx.body.get("confirm"))
        return {}

    def reset_begin(self, ctx: Ctx) -> dict:
        challenge_id, question = ctx.app.auth.begin_reset()
        return {"challenge_id": challenge_id, "question": question}

    def reset_request(self, ctx: Ctx) -> dict:
        ctx.app.auth.request_reset(ctx.body.get("challenge_id"),
                                   ctx.body.get("answer"),
                                   ctx.body.get("identity"))
        return {}

    def reset_complete(self, ctx: Ctx) -> dict:
        ctx.app.auth.complete_reset(ctx.body.get("token"),
                                    ctx.body.get("new_password"))
        return {}

    def menu(self, ctx: Ctx) -> dict:
        return {"items": ctx.app.auth.list_menu(ctx.session)}

    def account_view(self, ctx: Ctx) -> dict:
        return ctx.app.auth.view_account(ctx.session)

    def account_update(self, ctx: Ctx) -> dict:
        return ctx.app.auth.update_account(ctx.session, ctx.body)

    def set_locale(self, ctx: Ctx) -> dict:
        ctx.app.auth.set_locale(ctx.session, ctx.body.get("locale"))
        return {}

    # -- assets ----------------------------------------------------------------

    def asset_search(self, ctx: Ctx) -> dict:
        text = _first(ctx.query, "q")
        ast = parse_query(text) if text else None
        offset, limit = _paging(ctx.query)
        items, total = ctx.app.assets.search_assets(ctx.session, ast,
                                                    offset, limit)
        return _page(items, offset, total)

    def asset_add(self, ctx: Ctx) -> dict:
        asset_id = ctx.app.assets.add_asset(ctx.session, ctx.body)
        ctx.status = 201
        return {"AssetID": asset_id}

    def asset_get(self, ctx: Ctx) -> dict:
        return ctx.app.assets.get_asset(ctx.session, ctx.path["asset_id"])

    def asset_update(self, ctx: Ctx) -> dict:
        changes = dict(ctx.body)
        version = changes.pop("Version", None)
        if version is not None and (not isinstance(version, int)
                                    or isinstance(version, bool)):
            raise errors.ValidationFailed("Version must be an integer",
                                          field="Version")
        return ctx.app.assets.update_asset(ctx.session,
                                           ctx.path["asset_id"],
                                           changes, base_version=version)

    def asset_parameter(self, ctx: Ctx) -> dict:
        ctx.app.assets.set_parameter(ctx.session, ctx.path["asset_id"],
                                     ctx.body.get("ParameterName"),
                                     ctx.body.get("Value"))
        return {}

    def asset_report(self, ctx: Ctx):
        group_by = _first(ctx.query, "group_by")
        if not group_by:
            raise errors.ValidationFailed("group_by is required",
                                          field="group_by")
        rows = ctx.app.assets.asset_report(ctx.session, group_by)
        form = _first(ctx.query, "format", "json")
        if form == "csv":
            lines = ["Key,Count"] + [f"{key},{count}"
                                     for key, count in rows]
            return Raw("text/csv; charset=utf-8", "\n".join(lines) + "\n")
        if form != "json":
            raise errors.ValidationFailed(
                "format is either json or csv", field="format")
        return {"group_by": group_by,
                "rows": [{"key": key, "count": count}
                         for key, count in rows]}

    # -- groups ----------------------------------------------------------------

    def group_list(self, ctx: Ctx) -> dict:
        offset, limit = _paging(ctx.query)
        items, total = ctx.app.assets.list_groups(ctx.session, offset,
                                                  limit)
        return _page(items, offset, total)

    def group_create(self, ctx: Ctx) -> dict:
        group_id = ctx.app.assets.create_group(ctx.session, ctx.body)
        ctx.status = 201
        return {"GroupID": group_id}

    def group_get(self, ctx: Ctx) -> dict:
        return ctx.app.assets.get_group(ctx.session, ctx.path["group_id"])

    def group_update(self, ctx: Ctx) -> dict:
        return ctx.app.assets.update_group(ctx.session,
                                           ctx.path["group_id"], ctx.body)

    def group_delete(self, ctx: Ctx) -> dict:
        ctx.app.assets.delete_group(ctx.session, ctx.path["group_id"])
        return {}

    # -- locations ---------------------------------------------------------------

    def building_list(self, ctx: Ctx) -> dict:
        return {"items": ctx.app.locations.list_buildings(ctx.session)}

    def building_create(self, ctx: Ctx) -> dict:
        draft = dict(ctx.body)
        floor_count = draft.pop("FloorCount", None)
        if not isinstance(floor_count, int) or isinstance(floor_count,
                                                          bool):
            raise errors.ValidationFailed("FloorCount must be an integer",
                                          field="FloorCount")
        created = ctx.app.locations.create_building(ctx.session, draft,
                                                    floor_count)
        ctx.status = 201
        return created

    def location_fields(self, ctx: Ctx) -> dict:
        return {"fields": ctx.app.locations.search_fields(ctx.session)}

    def location_search(self, ctx: Ctx) -> dict:
        offset, limit = _paging(ctx.query)
        filters = {name: _first(ctx.query, name)
                   for name in ctx.query if name not in PAGING}
        items, total = ctx.app.locations.search_locations(
            ctx.session, filters, offset, limit)
        return _page(items, offset, total)

    def location_add(self, ctx: Ctx) -> dict:
        location_id = ctx.app.locations.add_location(ctx.session, ctx.body)
        ctx.status = 201
        return {"LocationID": location_id}

    def location_get(self, ctx: Ctx) -> dict:
        return ctx.app.locations.get_location(ctx.session,
                                              ctx.path["location_id"])

    def location_edit(self, ctx: Ctx) -> dict:
        changes = dict(ctx.body)
        version = changes.pop("Version", None)
        if version is not None and (not isinstance(version, int)
                                    or isinstance(version, bool)):
            raise errors.ValidationFailed("Version must be an integer",
                                          field="Version")
        return ctx.app.locations.edit_location(ctx.session,
                                               ctx.path["location_id"],
                                               changes,
                                               base_version=version)

    def lab_responsible(self, ctx: Ctx) -> dict:
        return ctx.app.locations.assign_lab_responsible(
            ctx.session, ctx.path["location_id"],
            _body_int(ctx.body, "UserID"))

    def lab_member(self, ctx: Ctx) -> dict:
        return ctx.app.locations.add_lab_member(
            ctx.session, ctx.path["location_id"],
            _body_int(ctx.body, "UserID"))

    # -- software ---------------------------------------------------------------

    def software_search(self, ctx: Ctx) -> dict:
        offset, limit = _paging(ctx.query)
        filters = {name: _first(ctx.query, name)
                   for name in ctx.query if name not in PAGING}
        items, total = ctx.app.software.search_software(
            ctx.session, filters, offset, limit)
        return _page(items, offset, total)

    def software_add(self, ctx: Ctx) -> dict:
        software_id = ctx.app.software.add_software(ctx.session, ctx.body)
        ctx.status = 201
        return {"SoftwareID": software_id}

    def software_get(self, ctx: Ctx) -> dict:
        return ctx.app.software.get_software(ctx.session,
                                             ctx.path["software_id"])

    def software_edit(self, ctx: Ctx) -> dict:
        changes = dict(ctx.body)
        version = changes.pop("Version", None)
        if version is not None and (not isinstance(version, int)
                                    or isinstance(version, bool)):
            raise errors.ValidationFailed("Version must be an integer",
                                          field="Version")
        return ctx.app.software.edit_software(ctx.session,
                                              ctx.path["software_id"],
                                              changes,
                                              base_version=version)

    def license_add(self, ctx: Ctx) -> dict:
        license_id = ctx.app.software.add_license(
            ctx.session, ctx.path["software_id"], ctx.body)
        ctx.status = 201
        return {"LicenseID": license_id}

    def license_get(self, ctx: Ctx) -> dict:
        return ctx.app.software.get_license(ctx.session,
                                            ctx.path["license_id"])

    def license_assign(self, ctx: Ctx) -> dict:
        return ctx.app.software.assign_license(
            ctx.session, ctx.path["license_id"],
            _body_int(ctx.body, "UserID"))

    def license_install(self, ctx: Ctx) -> dict:
        return ctx.app.software.install_license(
            ctx.session, ctx.path["license_id"],
            _body_int(ctx.body, "AssetID"))

    def license_expiring(self, ctx: Ctx) -> dict:
        days = _int_param(_first(ctx.query, "days"), "days", minimum=0)
        as_of = _first(ctx.query, "as_of") or ctx.app.auth.now().date()
        return ctx.app.software.licenses_near_expiry(ctx.session, days,
                                                     as_of=as_of)

    # -- requests ---------------------------------------------------------------

    def request_general(self, ctx: Ctx) -> dict:
        request_id = ctx.app.requests.submit_general(
            ctx.session, ctx.body.get("Category"),
            ctx.body.get("Description"))
        ctx.status = 201
        return {"RequestID": request_id}

    def request_specific(self, ctx: Ctx) -> dict:
        payload = {k: v for k, v in ctx.body.items()
                   if k not in ("Category", "Description")
                   and v is not None}
        request_id = ctx.app.requests.submit_specific(
            ctx.session, ctx.body.get("Category"), payload,
            description=ctx.body.get("Description"))
        ctx.status = 201
        return {"RequestID": request_id}

    def request_search(self, ctx: Ctx) -> dict:
        offset, limit = _paging(ctx.query)
        categories = ctx.query.get("category")
        items, total = ctx.app.requests.search_requests(
            ctx.session,
            statuses=ctx.query.get("status"),
            categories=categories,
            originator_username=_first(ctx.query, "originator_username"),
            originator_department=_first(ctx.query,
                                         "originator_department"),
            originator_faculty=_first(ctx.query, "originator_faculty"),
            offset=offset, limit=limit)
        return _page(items, offset, total)

    def request_get(self, ctx: Ctx) -> dict:
        return ctx.app.requests.get_request(ctx.session,
                                            ctx.path["request_id"])

    def request_close(self, ctx: Ctx) -> dict:
        return ctx.app.requests.close_request(ctx.session,
                                              ctx.path["request_id"],
                                              ctx.body.get("Note"))

    def request_approve(self, ctx: Ctx) -> dict:
        return ctx.app.requests.approve_request(ctx.session,
                                                ctx.path["request_id"])

    # -- administration -----------------------------------------------------------

    def grants_view(self, ctx: Ctx) -> dict:
        role_id = ctx.path["role_id"]
        return {"role_id": role_id,
                "grants": ctx.app.permissions.list_grants(ctx.session,
                                                          role_id)}

    def grants_update(self, ctx: Ctx) -> dict:
        role_id = ctx.path["role_id"]
        grants = ctx.body.get("grants")
        if grants is not None:
            if not isinstance(grants, dict):
                raise errors.ValidationFailed(
                    "grants must map permission names to booleans",
                    field="grants")
            ctx.app.permissions.replace_grants(ctx.session, role_id,
                                               grants)
        else:
            permission = ctx.body.get("permission")
            authorize = ctx.body.get("authorize")
            if not isinstance(authorize, bool):
                raise errors.ValidationFailed(
                    "authorize must be true or false", field="authorize")
            ctx.app.permissions.set_grant(ctx.session, role_id,
                                          permission, authorize)
        return {"role_id": role_id,
                "grants": ctx.app.permissions.list_grants(ctx.session,
                                                          role_id)}


def _read_json(environ) -> dict:
    try:
        length = int(environ.get("CONTENT_LENGTH") or 0)
    except ValueError:
        length = 0
    raw = environ["wsgi.input"].read(length) if length else b""
    if not raw:
        return {}
    try:
        body = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, ValueError):
        raise errors.ValidationFailed("the request body must be JSON")
    if not isinstance(body, dict):
        raise errors.ValidationFailed(
            "the request body must be a JSON object")
    return body


def serve(app: App, host: str = "127.0.0.1", port: int = 8750):
    """Build a threading WSGI server; the caller runs serve_forever."""
    from wsgiref.simple_server import (WSGIRequestHandler, WSGIServer,
                                       make_server)

    class ThreadingServer(socketserver.ThreadingMixIn, WSGIServer):
        daemon_threads = True

    class QuietHandler(WSGIRequestHandler):
        # keep-alive; every response carries Content-Length
        protocol_version = "HTTP/1.1"

        def log_message(self, format, *args):  # noqa: A002
            pass

    return make_server(host, port, JsonApi(app),
                       server_class=ThreadingServer,
                       handler_class=QuietHandler)
