/* Sign-in, including the extra department step for people who belong
 * to more than one department.  On success the session token lives in
 * the API client and the menu is fetched once for the shell. */

import type { AppContext } from "../app.js";
import type { LoginResult } from "../api.js";
import { el } from "../layout.js";
import { guardSubmit, showError, clearError, reason } from "../forms.js";

export async function render(ctx: AppContext): Promise<HTMLElement> {
  const section = el("section", { class: "login-page" });
  const heading = el("h1", null, "Sign in");
  const form = el("form", { class: "login-form" });
  const user = el("input", {
    name: "username",
    autocomplete: "username",
    required: "",
  });
  const pass = el("input", {
    name: "password",
    type: "password",
    autocomplete: "current-password",
    required: "",
  });
  form.append(
    el("label", null, "User name ", user),
    el("label", null, "Password ", pass),
    el("button", { type: "submit" }, "Sign in"),
  );
  guardSubmit(form, async () => {
    clearError(form);
    try {
      const result = await ctx.api.login(user.value, pass.value);
      if (result.choice_required) {
        section.replaceChildren(heading, departmentChoice(ctx, result));
        return;
      }
      await completeSignIn(ctx);
    } catch (error) {
      showError(form, reason(error));
    }
  });
  section.append(heading, form);
  return section;
}

function departmentChoice(ctx: AppContext, result: LoginResult): HTMLElement {
  const form = el("form", { class: "department-choice" });
  form.append(
    el(
      "p",
      null,
      "You belong to several departments; pick one for this session.",
    ),
  );
  for (const id of result.department_ids ?? []) {
    form.append(
      el(
        "label",
        null,
        el("input", { type: "radio", name: "department", value: String(id) }),
        ` Department ${id}`,
      ),
    );
  }
  form.append(el("button", { type: "submit" }, "Continue"));
  guardSubmit(form, async () => {
    clearError(form);
    const picked = form.querySelector<HTMLInputElement>(
      "input[name=department]:checked",
    );
    if (!picked) {
      showError(form, "pick a department first");
      return;
    }
    try {
      await ctx.api.chooseDepartment(
        result.pending_token ?? "",
        Number(picked.value),
      );
      await completeSignIn(ctx);
    } catch (error) {
      showError(form, reason(error));
    }
  });
  return form;
}

async function completeSignIn(ctx: AppContext): Promise<void> {
  const account = await ctx.api.account();
  ctx.state.userName = String(account.UserName ?? "");
  ctx.state.menu = (await ctx.api.menu()).items;
  await ctx.navigate("/");
}
