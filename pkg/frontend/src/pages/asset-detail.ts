/* One asset, every stored field.  Read-only: changes to assets travel
 * through the request workflow or the service's own update endpoint,
 * both of which enforce their rules server-side. */

import type { AppContext } from "../app.js";
import { el, cell } from "../layout.js";

/** Fields people look for first, in display order. */
const LEAD_FIELDS = [
  "AssetID",
  "BarCode",
  "Category",
  "Status",
  "Location",
  "Group",
  "Owner",
  "Manufacturer",
  "Model",
];

export async function render(
  ctx: AppContext,
  params: Record<string, string>,
): Promise<HTMLElement> {
  const asset = await ctx.api.getAsset(Number(params.id));
  const list = el("dl", { class: "asset-facts" });
  const seen = new Set<string>();
  const add = (key: string) => {
    seen.add(key);
    list.append(el("dt", null, key), el("dd", null, cell(asset[key])));
  };
  for (const key of LEAD_FIELDS) {
    if (key in asset) add(key);
  }
  for (const key of Object.keys(asset).sort()) {
    if (!seen.has(key)) add(key);
  }
  return el(
    "section",
    { class: "asset-detail-page" },
    el("h1", null, `Asset ${cell(asset.AssetID)} — ${cell(asset.BarCode)}`),
    list,
    el("p", null, el("a", { href: "#/assets" }, "Back to search")),
  );
}
