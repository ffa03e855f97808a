/* Licenses running out: the ones inside the chosen window and the ones
 * already past their date. */

import type { AppContext } from "../app.js";
import { el, dataTable, cell } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

const HEADERS = ["License", "Software", "Version", "Expires", "Days left"];

export async function render(
  ctx: AppContext,
  _params: Record<string, string>,
  query: URLSearchParams,
): Promise<HTMLElement> {
  const section = el("section", { class: "licenses-page" });
  section.append(el("h1", null, "Expiring licenses"));

  const form = el("form", { class: "window-form" });
  const days = el("input", {
    name: "days",
    type: "number",
    min: "0",
    value: query.get("days") ?? "30",
  });
  form.append(
    el("label", null, "Within days ", days),
    el("button", { type: "submit" }, "Show"),
  );

  const results = el("div", { class: "results" });
  const run = async () => {
    const report = await ctx.api.expiringLicenses(Number(days.value));
    results.replaceChildren(
      el("h2", null, "Expiring"),
      block(report.expiring, "Nothing expires inside the window."),
      el("h2", null, "Already expired"),
      block(report.expired, "Nothing has expired."),
    );
  };
  guardSubmit(form, async () => {
    clearError(form);
    try {
      await run();
    } catch (error) {
      showError(form, reason(error));
    }
  });

  section.append(form, results);
  await run();
  return section;
}

function block(
  rows: Array<Record<string, unknown>>,
  emptyText: string,
): HTMLElement {
  if (rows.length === 0) return el("p", { class: "empty" }, emptyText);
  return dataTable(
    HEADERS,
    rows.map((row) => [
      cell(row.LicenseID),
      cell(row.SoftwareName),
      cell(row.SoftwareVersion),
      cell(row.ExpirationDate),
      cell(row.DaysRemaining),
    ]),
  );
}
