/* Page shell shared by every routed view.  The markup order is part of
 * the contract: the main content element always precedes the side menu
 * in the DOM (screen readers and tests rely on it); the stylesheet
 * moves the menu to the left edge visually.  The footer carries the
 * five most visited pages from the client-local history. */

import type { AppContext } from "./app.js";

type Child = Node | string | null | undefined;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs?: Record<string, string> | null,
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (attrs) {
    for (const [key, value] of Object.entries(attrs)) {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    if (child !== null && child !== undefined) node.append(child);
  }
  return node;
}

/** A plain results table: one header row, then the data. */
export function dataTable(
  headers: readonly string[],
  rows: ReadonlyArray<ReadonlyArray<Node | string>>,
): HTMLTableElement {
  const head = el("tr");
  for (const label of headers) head.append(el("th", null, label));
  const body = el("tbody");
  for (const cells of rows) {
    const tr = el("tr");
    for (const cell of cells) tr.append(el("td", null, cell));
    body.append(tr);
  }
  return el("table", { class: "data" }, el("thead", null, head), body);
}

/** Show a value from a service row: nulls become a quiet dash. */
export function cell(value: unknown): string {
  return value === null || value === undefined ? "—" : String(value);
}

/** Menu addresses are service paths; route templated ones to the page
 * that lists their targets. */
export function menuHref(address: string): string {
  if (address === "/locations/{id}/members") return "#/locations";
  if (address.startsWith("/admin/roles")) return "#/admin/roles";
  return `#${address}`;
}

function header(ctx: AppContext): HTMLElement {
  const box = el("div", { class: "session-box" });
  if (ctx.state.userName) {
    const logout = el("button", { type: "button", class: "logout" }, "Log out");
    logout.addEventListener("click", async () => {
      // two-phase: the first click fetches a confirmation token, then
      // the user either confirms or returns to what they were doing
      const confirmToken = await ctx.api.logoutBegin();
      const confirmBtn = el("button", { type: "button" }, "Confirm log out");
      const returnBtn = el("button", { type: "button" }, "Return");
      const prompt = el(
        "span",
        { class: "logout-confirm" },
        "End the session? ",
        confirmBtn,
        " ",
        returnBtn,
      );
      confirmBtn.addEventListener("click", async () => {
        await ctx.api.logoutConfirm(confirmToken);
        ctx.state.userName = null;
        ctx.state.menu = [];
        await ctx.navigate("/login");
      });
      returnBtn.addEventListener("click", () => {
        prompt.replaceWith(logout);
      });
      logout.replaceWith(prompt);
    });
    box.append(el("span", { class: "who" }, ctx.state.userName), " ", logout);
  } else {
    box.append(el("a", { href: "#/login" }, "Log in"));
  }
  return el(
    "header",
    { class: "masthead" },
    el("a", { class: "brand", href: "#/" }, "Campus Inventory"),
    box,
  );
}

function sideMenu(ctx: AppContext): HTMLElement {
  const nav = el("nav", { "aria-label": "sections" });
  const list = el("ul");
  for (const item of ctx.state.menu) {
    list.append(
      el(
        "li",
        null,
        el("a", { href: menuHref(item.MenuAddress) }, item.MenuName),
      ),
    );
  }
  nav.append(list);
  return el("aside", { class: "side-menu" }, nav);
}

function footer(ctx: AppContext): HTMLElement {
  const nav = el("nav", { class: "frequent", "aria-label": "frequent pages" });
  for (const visit of ctx.history.top(5)) {
    nav.append(el("a", { href: `#${visit.path}` }, visit.title));
  }
  return el("footer", { class: "page-footer" }, nav);
}

export function renderShell(ctx: AppContext, content: HTMLElement): void {
  const main = el("main", { id: "content" }, content);
  // main first, menu second: keep this order
  const body = el("div", { class: "page-body" }, main, sideMenu(ctx));
  ctx.root.replaceChildren(header(ctx), body, footer(ctx));
}
