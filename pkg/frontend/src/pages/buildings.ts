/* Buildings and their floors. */

import type { AppContext } from "../app.js";
import { el, dataTable, cell } from "../layout.js";

export async function render(ctx: AppContext): Promise<HTMLElement> {
  const { items } = await ctx.api.listBuildings();
  const rows = items.map((building) => {
    const floors = Array.isArray(building.Floors)
      ? (building.Floors as Array<Record<string, unknown>>)
          .map((f) => String(f.FloorNo))
          .join(", ")
      : "";
    return [cell(building.BuildingID), cell(building.BuildingName), floors];
  });
  return el(
    "section",
    { class: "buildings-page" },
    el("h1", null, "Buildings"),
    rows.length
      ? dataTable(["ID", "Name", "Floors"], rows)
      : el("p", { class: "empty" }, "No buildings on file."),
  );
}
