/* Software titles with their license counts. */

import type { AppContext } from "../app.js";
import { el, dataTable, cell } from "../layout.js";

export async function render(ctx: AppContext): Promise<HTMLElement> {
  const page = await ctx.api.listSoftware();
  const rows = page.items.map((title) => [
    cell(title.SoftwareID),
    cell(title.Name),
    cell(title.Version),
    cell(title.VendorName),
    cell(title.LicenseCount),
  ]);
  return el(
    "section",
    { class: "software-page" },
    el("h1", null, "Software inventory"),
    rows.length
      ? dataTable(["ID", "Name", "Version", "Vendor", "Licenses"], rows)
      : el("p", { class: "empty" }, "No software on file."),
    el(
      "p",
      null,
      el("a", { href: "#/licenses/expiring" }, "Expiring licenses"),
    ),
  );
}
