/* Role grant editor.  The page shows whatever the service returns and
 * sends toggles straight back; it makes no judgement about which role
 * the signed-in user may edit — a refusal comes back as an error and
 * is shown as such. */

import type { AppContext } from "../app.js";
import { el, dataTable } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

export async function render(
  ctx: AppContext,
  _params: Record<string, string>,
  query: URLSearchParams,
): Promise<HTMLElement> {
  const section = el("section", { class: "admin-page" });
  section.append(el("h1", null, "Role grants"));

  const form = el("form", { class: "role-pick" });
  const roleInput = el("input", {
    name: "role",
    type: "number",
    min: "1",
    value: query.get("role") ?? "1",
  });
  form.append(
    el("label", null, "Role number ", roleInput),
    el("button", { type: "submit" }, "Load"),
  );

  const results = el("div", { class: "results" });
  const load = async () => {
    const roleId = Number(roleInput.value);
    const { grants } = await ctx.api.roleGrants(roleId);
    const rows = Object.entries(grants).map(([permission, allowed]) => {
      const toggleForm = el("form", { class: "grant-toggle" });
      toggleForm.append(
        el("button", { type: "submit" }, allowed ? "Revoke" : "Grant"),
      );
      guardSubmit(toggleForm, async () => {
        clearError(toggleForm);
        try {
          await ctx.api.setGrant(roleId, permission, !allowed);
          await load();
        } catch (error) {
          showError(toggleForm, reason(error));
        }
      });
      return [permission, allowed ? "allowed" : "denied", toggleForm];
    });
    results.replaceChildren(dataTable(["Permission", "State", ""], rows));
  };
  guardSubmit(form, async () => {
    clearError(form);
    try {
      await load();
    } catch (error) {
      showError(form, reason(error));
    }
  });

  section.append(form, results);
  try {
    await load();
  } catch (error) {
    showError(form, reason(error));
  }
  return section;
}
