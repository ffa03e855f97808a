/* Application core: hash routing, session state, and the page registry.
 * Every navigation re-renders the whole shell; pages are functions from
 * (context, path params, query params) to a DOM subtree.  All decisions
 * about who may do what stay on the server — this layer only routes,
 * renders, and relays refusals. */

import { Api, HttpError, type FetchLike, type MenuItem } from "./api.js";
import { VisitHistory, browserStore, type VisitStore } from "./history.js";
import { el, renderShell } from "./layout.js";
import * as loginPage from "./pages/login.js";
import * as homePage from "./pages/home.js";
import * as assetsPage from "./pages/assets.js";
import * as assetDetailPage from "./pages/asset-detail.js";
import * as reportPage from "./pages/report.js";
import * as groupsPage from "./pages/groups.js";
import * as buildingsPage from "./pages/buildings.js";
import * as locationsPage from "./pages/locations.js";
import * as softwarePage from "./pages/software.js";
import * as licensesPage from "./pages/licenses.js";
import * as requestsPage from "./pages/requests.js";
import * as requestNewPage from "./pages/request-new.js";
import * as adminRolesPage from "./pages/admin-roles.js";

export interface AppState {
  userName: string | null;
  menu: MenuItem[];
}

export interface AppContext {
  root: HTMLElement;
  api: Api;
  history: VisitHistory;
  state: AppState;
  navigate(path: string): Promise<void>;
  /** Re-render the current page (after an action changed the data). */
  refresh(): Promise<void>;
}

export type PageRender = (
  ctx: AppContext,
  params: Record<string, string>,
  query: URLSearchParams,
) => Promise<HTMLElement>;

export interface Route {
  pattern: RegExp;
  /** A representative concrete path; lets tooling visit every page. */
  sample: string;
  title: string;
  render: PageRender;
}

export const ROUTES: Route[] = [
  {
    pattern: /^\/login$/,
    sample: "/login",
    title: "Sign in",
    render: loginPage.render,
  },
  { pattern: /^\/$/, sample: "/", title: "Overview", render: homePage.render },
  {
    pattern: /^\/assets$/,
    sample: "/assets",
    title: "Assets",
    render: assetsPage.render,
  },
  {
    pattern: /^\/assets\/report$/,
    sample: "/assets/report",
    title: "Asset reports",
    render: reportPage.render,
  },
  {
    pattern: /^\/assets\/(?<id>\d+)$/,
    sample: "/assets/4",
    title: "Asset detail",
    render: assetDetailPage.render,
  },
  {
    pattern: /^\/groups$/,
    sample: "/groups",
    title: "Groups",
    render: groupsPage.render,
  },
  {
    pattern: /^\/buildings$/,
    sample: "/buildings",
    title: "Buildings",
    render: buildingsPage.render,
  },
  {
    pattern: /^\/locations$/,
    sample: "/locations",
    title: "Space inventory",
    render: locationsPage.render,
  },
  {
    pattern: /^\/software$/,
    sample: "/software",
    title: "Software inventory",
    render: softwarePage.render,
  },
  {
    pattern: /^\/licenses\/expiring$/,
    sample: "/licenses/expiring",
    title: "Expiring licenses",
    render: licensesPage.render,
  },
  {
    pattern: /^\/requests$/,
    sample: "/requests",
    title: "Requests",
    render: requestsPage.render,
  },
  {
    pattern: /^\/requests\/new$/,
    sample: "/requests/new",
    title: "New request",
    render: requestNewPage.render,
  },
  {
    pattern: /^\/admin\/roles$/,
    sample: "/admin/roles",
    title: "Role grants",
    render: adminRolesPage.render,
  },
];

export interface AppOptions {
  fetchImpl?: FetchLike;
  visitStore?: VisitStore;
  /** API origin when the service is not same-origin with the page. */
  base?: string;
}

function hashPath(): string {
  const hash = window.location.hash;
  return hash.startsWith("#") && hash.length > 1 ? hash.slice(1) : "/";
}

export class App {
  readonly ctx: AppContext;
  private currentPath = "";
  private readonly onHashChange = (): void => {
    const path = hashPath();
    if (path !== this.currentPath) void this.show(path);
  };

  constructor(root: HTMLElement, options: AppOptions = {}) {
    this.ctx = {
      root,
      api: new Api(options.fetchImpl, options.base),
      history: new VisitHistory(options.visitStore ?? browserStore()),
      state: { userName: null, menu: [] },
      navigate: (path) => this.navigate(path),
      refresh: () => this.show(this.currentPath),
    };
    window.addEventListener("hashchange", this.onHashChange);
  }

  start(): Promise<void> {
    return this.show(hashPath());
  }

  /** Detach from the window (a replaced instance must stop rendering). */
  stop(): void {
    window.removeEventListener("hashchange", this.onHashChange);
  }

  async navigate(path: string): Promise<void> {
    await this.show(path);
    // reflect the page in the address bar; the guard above keeps the
    // resulting hashchange from rendering a second time
    if (hashPath() !== this.currentPath) {
      window.location.hash = `#${this.currentPath}`;
    }
  }

  private async show(path: string): Promise<void> {
    this.currentPath = path;
    const cut = path.indexOf("?");
    const pathname = cut === -1 ? path : path.slice(0, cut);
    const query = new URLSearchParams(cut === -1 ? "" : path.slice(cut + 1));
    if (!this.ctx.state.userName && pathname !== "/login") {
      await this.show("/login");
      return;
    }
    const route = ROUTES.find((r) => r.pattern.test(pathname));
    let content: HTMLElement;
    if (!route) {
      content = el(
        "section",
        null,
        el("h1", null, "Page not found"),
        el("p", null, `Nothing lives at ${pathname}.`),
      );
    } else {
      const params = route.pattern.exec(pathname)?.groups ?? {};
      try {
        content = await route.render(this.ctx, params, query);
      } catch (error) {
        if (error instanceof HttpError && error.status === 401) {
          // the session lapsed server-side; start over
          this.ctx.api.token = null;
          this.ctx.state.userName = null;
          this.ctx.state.menu = [];
          await this.show("/login");
          return;
        }
        content = el(
          "section",
          null,
          el("h1", null, route.title),
          el(
            "p",
            { class: "form-error" },
            error instanceof Error ? error.message : String(error),
          ),
        );
      }
      if (pathname !== "/login") {
        this.ctx.history.record(pathname, route.title);
      }
    }
    renderShell(this.ctx, content);
  }
}

export function createApp(root: HTMLElement, options: AppOptions = {}): App {
  return new App(root, options);
}
