/* Active asset groups with their members. */

import type { AppContext } from "../app.js";
import { el, dataTable, cell } from "../layout.js";

export async function render(ctx: AppContext): Promise<HTMLElement> {
  const page = await ctx.api.listGroups();
  const rows = page.items.map((group) => {
    const members = Array.isArray(group.Members)
      ? (group.Members as Array<Record<string, unknown>>)
          .map((m) => String(m.BarCode ?? m.AssetID))
          .join(", ")
      : "";
    return [
      cell(group.GroupID),
      cell(group.GroupName),
      cell(group.Location),
      cell(group.UserName),
      members,
    ];
  });
  return el(
    "section",
    { class: "groups-page" },
    el("h1", null, "Groups"),
    rows.length
      ? dataTable(["ID", "Name", "Location", "Owner", "Members"], rows)
      : el("p", { class: "empty" }, "No active groups."),
  );
}
