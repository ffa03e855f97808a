/* Asset counts grouped by a chosen field.  The service does the
 * counting; this page just picks the grouping and shows the rows. */

import type { AppContext } from "../app.js";
import { el, dataTable, cell } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

const GROUPINGS = [
  "Category",
  "Status",
  "Type",
  "Location",
  "Manufacturer",
  "Owner",
];

export async function render(
  ctx: AppContext,
  _params: Record<string, string>,
  query: URLSearchParams,
): Promise<HTMLElement> {
  const section = el("section", { class: "report-page" });
  section.append(el("h1", null, "Asset reports"));

  const form = el("form", { class: "report-form" });
  const pick = el("select", { name: "group_by" });
  for (const name of GROUPINGS) {
    pick.append(el("option", { value: name }, name));
  }
  const initial = query.get("group_by") ?? "Category";
  pick.value = GROUPINGS.includes(initial) ? initial : "Category";
  form.append(
    el("label", null, "Group by ", pick),
    el("button", { type: "submit" }, "Count"),
  );

  const results = el("div", { class: "results" });
  const run = async () => {
    const report = await ctx.api.assetReport(pick.value);
    const rows = report.rows.map((row) => [cell(row.key), String(row.count)]);
    results.replaceChildren(
      rows.length
        ? dataTable([report.group_by, "Count"], rows)
        : el("p", { class: "empty" }, "Nothing to count."),
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
