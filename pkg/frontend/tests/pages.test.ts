/* Page behaviors beyond layout: data lands where it should, the query
 * travels to the service verbatim, and multi-department sign-in asks
 * for a choice. */

import { describe, expect, test } from "vitest";
import { boot, field, settle, signIn, submit, typeInto } from "./helpers.js";

describe("asset pages", () => {
  test("search results link to the asset detail page", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/assets");
    const link = booted.root.querySelector<HTMLAnchorElement>(
      'table.data a[href="#/assets/4"]',
    );
    expect(link).toBeTruthy();
    await booted.app.navigate("/assets/4");
    await settle();
    expect(booted.root.textContent).toContain("Asset 4 — BC-0004");
    expect(booted.root.textContent).toContain("H-601");
    expect(booted.root.textContent).toContain("OptiPlex 7010");
  });

  test("the box text goes to the service as the q parameter", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/assets");
    typeInto(field(booted.root, "field-Location"), "H-623");
    submit(booted.root.querySelector("form.asset-search")!);
    await settle();
    const searches = booted.server.state.calls.filter(
      (c) => c.path === "/assets" && c.method === "GET" && c.query !== "",
    );
    const last = searches[searches.length - 1]!;
    expect(new URLSearchParams(last.query).get("q")).toBe(
      'Location: "H-623"',
    );
  });

  test("an empty box searches without a q parameter", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/assets");
    const initial = booted.server.state.calls.filter(
      (c) => c.path === "/assets" && c.method === "GET",
    );
    expect(initial[initial.length - 1]!.query).toBe("");
  });

  test("the report page counts by the chosen grouping", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/assets/report");
    await settle();
    const cells = [...booted.root.querySelectorAll("table.data td")].map(
      (td) => td.textContent,
    );
    expect(cells).toContain("Computer");
    expect(cells).toContain("2");
    const headers = [...booted.root.querySelectorAll("table.data th")].map(
      (th) => th.textContent,
    );
    expect(headers).toEqual(["Category", "Count"]);
  });
});

describe("inventory pages", () => {
  test("groups list members by bar code", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/groups");
    expect(booted.root.textContent).toContain("Classroom 623 set");
    expect(booted.root.textContent).toContain("BC-0002, BC-0003");
  });

  test("buildings list their floors", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/buildings");
    expect(booted.root.textContent).toContain("Hall");
    expect(booted.root.textContent).toContain("5, 6");
  });

  test("software shows license counts", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/software");
    const row = booted.root.querySelector("table.data tbody tr")!;
    expect(row.textContent).toContain("MATLAB");
    expect(row.textContent).toContain("MathWorks");
    expect(row.textContent).toContain("2");
  });

  test("expiring licenses split into upcoming and already expired", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/licenses/expiring");
    await settle();
    const text = booted.root.textContent ?? "";
    expect(text).toContain("Expiring");
    expect(text).toContain("Already expired");
    expect(text).toContain("13");
    expect(text).toContain("-49");
  });
});

describe("role grants", () => {
  test("toggling a grant sends the PUT and re-renders the table", async () => {
    const booted = await boot();
    await signIn(booted);
    await booted.app.navigate("/admin/roles");
    await settle();
    const rows = [...booted.root.querySelectorAll("table.data tbody tr")];
    expect(rows).toHaveLength(3);
    const addRow = rows.find((tr) => tr.textContent?.includes("asset.add"))!;
    expect(addRow.textContent).toContain("denied");
    submit(addRow.querySelector("form.grant-toggle")!);
    await settle();
    expect(booted.server.state.grants["asset.add"]).toBe(true);
    const put = booted.server.state.calls.find((c) => c.method === "PUT");
    expect(put!.path).toBe("/admin/roles/1/grants");
    expect(put!.body).toEqual({ permission: "asset.add", authorize: true });
    const redrawn = [
      ...booted.root.querySelectorAll("table.data tbody tr"),
    ].find((tr) => tr.textContent?.includes("asset.add"))!;
    expect(redrawn.textContent).toContain("allowed");
  });
});

describe("multi-department sign-in", () => {
  test("the second step picks the department for the session", async () => {
    const booted = await boot();
    typeInto(field(booted.root, "username"), "t_two");
    typeInto(field(booted.root, "password"), "pw");
    submit(booted.root.querySelector("form.login-form")!);
    await settle();
    const choice = booted.root.querySelector("form.department-choice");
    expect(choice).toBeTruthy();
    const radios = [
      ...choice!.querySelectorAll<HTMLInputElement>(
        'input[name="department"]',
      ),
    ];
    expect(radios.map((r) => r.value)).toEqual(["1", "2"]);
    radios[1]!.checked = true;
    submit(choice!);
    await settle();
    expect(booted.server.state.token).toBe("tok-1");
    expect(booted.root.textContent).toContain("Welcome");
    const chose = booted.server.state.calls.find(
      (c) => c.path === "/auth/choose-department",
    );
    expect(chose!.body).toEqual({
      pending_token: "pending-1",
      department_id: 2,
    });
  });

  test("skipping the choice is refused", async () => {
    const booted = await boot();
    typeInto(field(booted.root, "username"), "t_two");
    typeInto(field(booted.root, "password"), "pw");
    submit(booted.root.querySelector("form.login-form")!);
    await settle();
    const choice = booted.root.querySelector("form.department-choice")!;
    submit(choice);
    await settle();
    expect(choice.querySelector(".form-error")!.textContent).toContain(
      "pick a department",
    );
  });

  test("bad credentials stay on the sign-in page with the reason", async () => {
    const booted = await boot();
    typeInto(field(booted.root, "username"), "j_doe");
    typeInto(field(booted.root, "password"), "wrong");
    submit(booted.root.querySelector("form.login-form")!);
    await settle();
    const error = booted.root.querySelector(".form-error");
    expect(error!.textContent).toContain("BAD_CREDENTIALS");
    expect(booted.server.state.token).toBeNull();
  });
});
