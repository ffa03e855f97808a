/* Submitting requests.  General requests carry only a category and a
 * description; specific requests point at concrete things — an asset
 * by bar code, a location by name, a group, a user, a compartment.
 * Descriptions are capped at 256 characters, and the counter shows how
 * much room is left. */

import type { AppContext } from "../app.js";
import { el } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

const DESCRIPTION_CAP = 256;
const GENERAL_CATEGORIES = ["Technical", "Administrative"];
const SPECIFIC_CATEGORIES = [
  "MoveAsset",
  "AssignAsset",
  "ReserveCompartment",
  "Other",
];

export async function render(ctx: AppContext): Promise<HTMLElement> {
  return el(
    "section",
    { class: "request-new-page" },
    el("h1", null, "New request"),
    el("h2", null, "General"),
    generalForm(ctx),
    el("h2", null, "Specific"),
    specificForm(ctx),
    el(
      "p",
      null,
      el("a", { href: "#/requests" }, "Back to the request list"),
    ),
  );
}

function describedText(): {
  wrap: HTMLElement;
  area: HTMLTextAreaElement;
} {
  const area = el("textarea", {
    name: "description",
    rows: "4",
    maxlength: String(DESCRIPTION_CAP),
  });
  const counter = el(
    "span",
    { class: "char-counter" },
    `0/${DESCRIPTION_CAP}`,
  );
  area.addEventListener("input", () => {
    counter.textContent = `${area.value.length}/${DESCRIPTION_CAP}`;
  });
  const wrap = el(
    "label",
    { class: "description-label" },
    "Description ",
    area,
    counter,
  );
  return { wrap, area };
}

function categoryPick(names: string[]): HTMLSelectElement {
  const pick = el("select", { name: "category" });
  for (const name of names) pick.append(el("option", { value: name }, name));
  return pick;
}

function generalForm(ctx: AppContext): HTMLElement {
  const form = el("form", { class: "general-request" });
  const category = categoryPick(GENERAL_CATEGORIES);
  const { wrap, area } = describedText();
  form.append(
    el("label", null, "Category ", category),
    wrap,
    el("button", { type: "submit" }, "Submit request"),
  );
  guardSubmit(form, async () => {
    clearError(form);
    try {
      const { RequestID } = await ctx.api.submitGeneralRequest(
        category.value,
        area.value,
      );
      form.replaceChildren(
        el("p", { class: "success" }, `Request ${RequestID} submitted.`),
        el("a", { href: "#/requests?status=Pending" }, "See pending requests"),
      );
    } catch (error) {
      showError(form, reason(error));
    }
  });
  return form;
}

function specificForm(ctx: AppContext): HTMLElement {
  const form = el("form", { class: "specific-request" });
  const category = categoryPick(SPECIFIC_CATEGORIES);
  const { wrap, area } = describedText();
  const barCode = el("input", { name: "BarCode" });
  const locationName = el("input", { name: "LocationName" });
  const groupId = el("input", { name: "GroupID", type: "number" });
  const userName = el("input", { name: "UserName" });
  const compartment = el("input", { name: "CompartmentNo", type: "number" });
  form.append(
    el("label", null, "Category ", category),
    wrap,
    el("label", null, "Asset bar code ", barCode),
    el("label", null, "Location name ", locationName),
    el("label", null, "Group number ", groupId),
    el("label", null, "User name ", userName),
    el("label", null, "Compartment number ", compartment),
    el("button", { type: "submit" }, "Submit request"),
  );
  guardSubmit(form, async () => {
    clearError(form);
    const body: Parameters<typeof ctx.api.submitSpecificRequest>[0] = {
      Category: category.value,
    };
    if (area.value !== "") body.Description = area.value;
    if (barCode.value !== "") body.BarCode = barCode.value;
    if (locationName.value !== "") body.LocationName = locationName.value;
    if (groupId.value !== "") body.GroupID = Number(groupId.value);
    if (userName.value !== "") body.UserName = userName.value;
    if (compartment.value !== "") body.CompartmentNo = Number(compartment.value);
    try {
      const { RequestID } = await ctx.api.submitSpecificRequest(body);
      form.replaceChildren(
        el("p", { class: "success" }, `Request ${RequestID} submitted.`),
        el("a", { href: "#/requests?status=Pending" }, "See pending requests"),
      );
    } catch (error) {
      showError(form, reason(error));
    }
  });
  return form;
}
