/* Landing page: who is signed in and where to go next.  The quick
 * links only navigate — whether an action is allowed is the server's
 * call once the user gets there. */

import type { AppContext } from "../app.js";
import { el } from "../layout.js";

export async function render(ctx: AppContext): Promise<HTMLElement> {
  const account = await ctx.api.account();
  const name = String(account.FirstName ?? account.UserName ?? "");
  const departments = Array.isArray(account.Departments)
    ? (account.Departments as string[]).join(", ")
    : "";
  return el(
    "section",
    { class: "home-page" },
    el("h1", null, `Welcome, ${name}`),
    el(
      "dl",
      { class: "account-facts" },
      el("dt", null, "Signed in as"),
      el("dd", null, String(account.UserName ?? "")),
      el("dt", null, "Role"),
      el("dd", null, String(account.RoleName ?? "")),
      el("dt", null, "Departments"),
      el("dd", null, departments),
    ),
    el("h2", null, "Quick links"),
    el(
      "nav",
      { class: "quick-links", "aria-label": "quick links" },
      el(
        "a",
        {
          href: "#/requests?status=Pending&kind=Specific",
          class: "quick-approve",
        },
        "Approve Pending Changes",
      ),
      el("a", { href: "#/requests/new" }, "Submit a request"),
      el("a", { href: "#/assets" }, "Find assets"),
      el("a", { href: "#/licenses/expiring" }, "Expiring licenses"),
    ),
  );
}
