/* Asset search.  The page offers two entrances to the same query
 * language: a free-text query box, and one input per common field.
 * Editing any field input rebuilds the box text from the field values,
 * so the box always shows the exact query the form would run — ready
 * to be edited further by hand or copied elsewhere. */

import type { AppContext } from "../app.js";
import type { PageOf } from "../api.js";
import { el, dataTable, cell } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";
import { FieldCatalog, buildFromFields, serialize } from "../query.js";

/** Mirror of the service's search vocabulary for assets. */
export const ASSET_CATALOG = new FieldCatalog({
  AssetID: "int",
  BarCode: "text",
  Owner: "text",
  LegacyCode: "text",
  DatePurchased: "timestamp",
  WarrantyExpiration: "timestamp",
  Manufacturer: "text",
  Model: "text",
  Category: "text",
  Status: "text",
  PoNumber: "text",
  PRequest: "text",
  LocationID: "int",
  DepartmentID: "int",
  GroupID: "int",
  Location: "text",
  Group: "text",
  Type: "text",
  FurnitureType: "text",
  EquipmentType: "text",
  Dimension: "text",
  Color: "text",
  Finish: "text",
  NumberOfCompartment: "int",
  SerialNo: "text",
  UserID: "int",
  Processor: "text",
  MACAddress: "text",
  HardDriveCap: "text",
  ROM: "text",
  RAM: "text",
});

/** The fields the form spells out; everything else goes via the box. */
export const HELPER_FIELDS = [
  "Location",
  "Type",
  "Category",
  "Status",
  "Owner",
  "BarCode",
] as const;

export async function render(
  ctx: AppContext,
  _params: Record<string, string>,
  query: URLSearchParams,
): Promise<HTMLElement> {
  const section = el("section", { class: "assets-page" });
  section.append(el("h1", null, "Assets"));

  const form = el("form", { class: "asset-search" });
  const box = el("input", {
    name: "q",
    class: "query-box",
    spellcheck: "false",
    placeholder: 'Location: "H-601" AND Category: "Computer"',
  });
  box.value = query.get("q") ?? "";

  const helpers: Array<readonly [string, HTMLInputElement]> = [];
  const fieldset = el(
    "fieldset",
    { class: "search-fields" },
    el("legend", null, "Search fields"),
  );
  for (const name of HELPER_FIELDS) {
    const input = el("input", { name: `field-${name}` });
    helpers.push([name, input] as const);
    fieldset.append(el("label", null, `${name} `, input));
  }
  const syncBox = () => {
    const pairs = helpers.map(
      ([name, input]) => [name, input.value] as const,
    );
    box.value = pairs.some(([, value]) => value !== "")
      ? serialize(buildFromFields(pairs, ASSET_CATALOG), ASSET_CATALOG)
      : "";
  };
  for (const [, input] of helpers) {
    input.addEventListener("input", syncBox);
  }

  const results = el("div", { class: "results" });
  const run = async () => {
    const text = box.value.trim();
    const page = await ctx.api.searchAssets(text === "" ? undefined : text);
    results.replaceChildren(assetTable(page));
  };

  form.append(
    el("label", { class: "query-label" }, "Query ", box),
    fieldset,
    el("button", { type: "submit" }, "Search"),
  );
  guardSubmit(form, async () => {
    clearError(form);
    try {
      await run();
    } catch (error) {
      showError(form, reason(error));
    }
  });

  section.append(
    form,
    results,
    el("p", null, el("a", { href: "#/assets/report" }, "Asset reports")),
  );
  await run();
  return section;
}

function assetTable(page: PageOf<Record<string, unknown>>): HTMLElement {
  if (page.items.length === 0) {
    return el("p", { class: "empty" }, "No assets match.");
  }
  const rows = page.items.map((row) => [
    el("a", { href: `#/assets/${row.AssetID}` }, String(row.AssetID)),
    cell(row.BarCode),
    cell(row.Category),
    cell(row.Type ?? row.FurnitureType ?? row.EquipmentType),
    cell(row.Status),
    cell(row.Location),
    cell(row.Group),
  ]);
  const table = dataTable(
    ["ID", "Bar code", "Category", "Type", "Status", "Location", "Group"],
    rows,
  );
  return el(
    "div",
    null,
    el("p", { class: "result-count" }, `${page.items.length} of ${page.total} assets`),
    table,
  );
}
