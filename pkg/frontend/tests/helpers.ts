/* Booting the app against the fake service and driving it the way a
 * person would: fill inputs, dispatch events, wait for the dust. */

import { App, createApp } from "../src/app.js";
import { fakeServer, type FakeServer } from "./fake-server.js";
import type { Visit, VisitStore } from "../src/history.js";

export function memoryStore(): VisitStore {
  let saved: Visit[] | null = null;
  return {
    load: () => saved,
    save(visits) {
      saved = visits;
    },
  };
}

/** Let every queued promise chain and zero-delay timer run out. */
export async function settle(): Promise<void> {
  for (let round = 0; round < 8; round += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export interface Booted {
  app: App;
  server: FakeServer;
  root: HTMLElement;
}

let lastApp: App | null = null;

export async function boot(): Promise<Booted> {
  lastApp?.stop();
  window.location.hash = "";
  document.body.innerHTML = "";
  const root = document.createElement("div");
  root.id = "app";
  document.body.append(root);
  const server = fakeServer();
  const app = createApp(root, {
    fetchImpl: server.fetch,
    visitStore: memoryStore(),
  });
  lastApp = app;
  await app.start();
  await settle();
  return { app, server, root };
}

export function submit(form: Element): void {
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

export function typeInto(
  input: HTMLInputElement | HTMLTextAreaElement,
  text: string,
): void {
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function field(root: ParentNode, name: string): HTMLInputElement {
  const found = root.querySelector<HTMLInputElement>(`input[name="${name}"]`);
  if (!found) throw new Error(`no input named ${name}`);
  return found;
}

export async function signIn(booted: Booted): Promise<void> {
  typeInto(field(booted.root, "username"), "j_doe");
  typeInto(field(booted.root, "password"), "papermoon2");
  const form = booted.root.querySelector("form.login-form");
  if (!form) throw new Error("no login form on the page");
  submit(form);
  await settle();
}
