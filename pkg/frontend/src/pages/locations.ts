/* Space inventory.  The service says which location fields are
 * searchable and what to call them in the session's language; the form
 * and the result columns are both built from that answer, so switching
 * the locale relabels everything after one round trip. */

import type { AppContext } from "../app.js";
import type { PageOf, SearchField } from "../api.js";
import { el, dataTable, cell } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

const LOCALES = ["en", "fr"] as const;

export async function render(ctx: AppContext): Promise<HTMLElement> {
  const section = el("section", { class: "locations-page" });
  const toggle = el("div", { class: "locale-toggle" }, "Labels: ");
  for (const locale of LOCALES) {
    const button = el(
      "button",
      { type: "button", "data-locale": locale },
      locale.toUpperCase(),
    );
    button.addEventListener("click", async () => {
      await ctx.api.setLocale(locale);
      await ctx.refresh();
    });
    toggle.append(button, " ");
  }
  section.append(el("h1", null, "Space inventory"), toggle);

  const { fields } = await ctx.api.locationFields();
  const visible = fields.filter((field) => field.visible);

  const form = el("form", { class: "location-search" });
  const inputs: Array<readonly [string, HTMLInputElement]> = [];
  for (const field of visible) {
    const input = el("input", { name: field.name });
    inputs.push([field.name, input] as const);
    form.append(el("label", null, `${field.label} `, input));
  }
  form.append(el("button", { type: "submit" }, "Search"));

  const results = el("div", { class: "results" });
  const run = async () => {
    const filters: Record<string, string> = {};
    for (const [name, input] of inputs) {
      if (input.value !== "") filters[name] = input.value;
    }
    const page = await ctx.api.searchLocations(filters);
    results.replaceChildren(locationTable(visible, page));
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

function locationTable(
  visible: SearchField[],
  page: PageOf<Record<string, unknown>>,
): HTMLElement {
  if (page.items.length === 0) {
    return el("p", { class: "empty" }, "No locations match.");
  }
  const rows = page.items.map((row) =>
    visible.map((field) => cell(row[field.name])),
  );
  return el(
    "div",
    null,
    el(
      "p",
      { class: "result-count" },
      `${page.items.length} of ${page.total} locations`,
    ),
    dataTable(
      visible.map((field) => field.label),
      rows,
    ),
  );
}
