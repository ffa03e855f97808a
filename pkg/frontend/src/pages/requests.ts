/* Request workbench: filter by status and kind, then act on rows.
 * Action forms appear by the request's state — closing and approval
 * only mean anything while a request is pending — and the server alone
 * decides whether this session may actually perform them.  The kind
 * filter narrows the display locally; the service's search has no kind
 * parameter. */

import type { AppContext } from "../app.js";
import { el, dataTable, cell } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

const STATUSES = ["Pending", "Approved", "Closed"] as const;
const KINDS = ["All", "General", "Specific"] as const;

export async function render(
  ctx: AppContext,
  _params: Record<string, string>,
  query: URLSearchParams,
): Promise<HTMLElement> {
  const chosen = query.getAll("status").filter((s) => s !== "");
  const statuses = chosen.length ? chosen : [...STATUSES];
  const kindParam = query.get("kind") ?? "All";
  const kind = (KINDS as readonly string[]).includes(kindParam)
    ? kindParam
    : "All";

  const section = el("section", { class: "requests-page" });
  section.append(
    el("h1", null, "Requests"),
    el(
      "p",
      null,
      el("a", { href: "#/requests/new" }, "Submit a new request"),
    ),
  );

  // the filter bar navigates; the page address carries the filter
  const filter = el("form", { class: "request-filter" });
  const statusBoxes: HTMLInputElement[] = [];
  for (const status of STATUSES) {
    const box = el("input", {
      type: "checkbox",
      name: "status",
      value: status,
    });
    box.checked = statuses.includes(status);
    statusBoxes.push(box);
    filter.append(el("label", null, box, ` ${status}`));
  }
  const kindPick = el("select", { name: "kind" });
  for (const name of KINDS) {
    kindPick.append(el("option", { value: name }, name));
  }
  kindPick.value = kind;
  filter.append(
    el("label", null, "Kind ", kindPick),
    el("button", { type: "submit" }, "Apply"),
  );
  guardSubmit(filter, async () => {
    const params = new URLSearchParams();
    for (const box of statusBoxes) {
      if (box.checked) params.append("status", box.value);
    }
    if (kindPick.value !== "All") params.set("kind", kindPick.value);
    const tail = params.toString();
    await ctx.navigate(`/requests${tail ? `?${tail}` : ""}`);
  });
  section.append(filter);

  const page = await ctx.api.searchRequests({ statuses });
  let rows = page.items;
  if (kind !== "All") {
    rows = rows.filter((row) => row.Kind === kind);
  }
  if (rows.length === 0) {
    section.append(el("p", { class: "empty" }, "No requests match."));
    return section;
  }
  section.append(
    dataTable(
      [
        "ID",
        "Category",
        "Kind",
        "Status",
        "Requester",
        "Description",
        "Actions",
      ],
      rows.map((row) => [
        cell(row.RequestID),
        cell(row.Category),
        cell(row.Kind),
        cell(row.Status),
        cell(row.RequesterName ?? row.RequesterUserName),
        cell(row.Description),
        actions(ctx, row),
      ]),
    ),
  );
  return section;
}

function actions(ctx: AppContext, row: Record<string, unknown>): HTMLElement {
  const slot = el("div", { class: "row-actions" });
  if (row.Status !== "Pending") {
    if (row.Status === "Closed" && row.ClosureNote) {
      slot.append(el("span", { class: "note" }, `Note: ${row.ClosureNote}`));
    }
    return slot;
  }
  const id = Number(row.RequestID);
  if (row.Kind === "Specific") {
    // only a specific, still-pending request can be approved
    const approve = el("form", { class: "approve-form" });
    approve.append(el("button", { type: "submit" }, "Approve"));
    guardSubmit(approve, async () => {
      clearError(approve);
      try {
        await ctx.api.approveRequest(id);
        await ctx.refresh();
      } catch (error) {
        showError(approve, reason(error));
      }
    });
    slot.append(approve);
  }
  const close = el("form", { class: "close-form" });
  const note = el("input", { name: "note", placeholder: "closure note" });
  close.append(note, el("button", { type: "submit" }, "Close"));
  guardSubmit(close, async () => {
    clearError(close);
    try {
      await ctx.api.closeRequest(id, note.value);
      await ctx.refresh();
    } catch (error) {
      showError(close, reason(error));
    }
  });
  slot.append(close);
  return slot;
}
