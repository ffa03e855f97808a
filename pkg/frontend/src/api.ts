/* The one place that talks to the service.  Everything goes over
 * HTTP/JSON; the client holds a session token and nothing else about
 * the caller.  Notably absent: role or permission logic.  The menu, the
 * data and every refusal come from the server. */

export interface ApiErrorBody {
  code: string;
  message: string;
  field?: string;
  position?: number;
}

export class HttpError extends Error {
  constructor(
    readonly status: number,
    readonly detail: ApiErrorBody,
  ) {
    super(detail.message);
    this.name = "HttpError";
  }

  get code(): string {
    return this.detail.code;
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export interface MenuItem {
  MenuId: number;
  MenuName: string;
  MenuAddress: string;
}

export interface PageOf<T> {
  items: T[];
  offset: number;
  total: number;
}

export interface LoginResult {
  choice_required: boolean;
  token?: string;
  pending_token?: string;
  department_ids?: number[];
}

export interface SearchField {
  name: string;
  label: string;
  visible: boolean;
}

type Query = Record<string, string | number | Array<string | number>>;

export class Api {
  token: string | null = null;

  constructor(
    private readonly fetchImpl: FetchLike = (input, init) =>
      fetch(input, init),
    private readonly base: string = "",
  ) {}

  private async call(
    method: string,
    path: string,
    body?: unknown,
    query?: Query,
  ): Promise<unknown> {
    let url = this.base + path;
    if (query) {
      const params = new URLSearchParams();
      for (const [key, value] of Object.entries(query)) {
        for (const one of Array.isArray(value) ? value : [value]) {
          params.append(key, String(one));
        }
      }
      const qs = params.toString();
      if (qs) url += `?${qs}`;
    }
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["content-type"] = "application/json";
    if (this.token) headers["X-Session-Token"] = this.token;
    const response = await this.fetchImpl(url, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      const detail = (payload as { error?: ApiErrorBody }).error ?? {
        code: "UNKNOWN",
        message: `HTTP ${response.status}`,
      };
      throw new HttpError(response.status, detail);
    }
    return payload;
  }

  // -- session ---------------------------------------------------------

  async login(username: string, password: string): Promise<LoginResult> {
    const result = (await this.call("POST", "/auth/login", {
      username,
      password,
    })) as LoginResult;
    if (!result.choice_required && result.token) this.token = result.token;
    return result;
  }

  async chooseDepartment(
    pendingToken: string,
    departmentId: number,
  ): Promise<void> {
    const result = (await this.call("POST", "/auth/choose-department", {
      pending_token: pendingToken,
      department_id: departmentId,
    })) as LoginResult;
    if (result.token) this.token = result.token;
  }

  async logoutBegin(): Promise<string> {
    const result = (await this.call("POST", "/auth/logout", {})) as {
      confirm_token: string;
    };
    return result.confirm_token;
  }

  async logoutConfirm(confirmToken: string): Promise<void> {
    await this.call("POST", "/auth/logout/confirm", {
      confirm_token: confirmToken,
    });
    this.token = null;
  }

  menu(): Promise<{ items: MenuItem[] }> {
    return this.call("GET", "/menu") as Promise<{ items: MenuItem[] }>;
  }

  account(): Promise<Record<string, unknown>> {
    return this.call("GET", "/account") as Promise<Record<string, unknown>>;
  }

  async setLocale(locale: string): Promise<void> {
    await this.call("PUT", "/account/locale", { locale });
  }

  // -- assets ------------------------------------------------------------

  searchAssets(
    q: string | undefined,
    paging?: { offset?: number; limit?: number },
  ): Promise<PageOf<Record<string, unknown>>> {
    const query: Query = {};
    if (q) query.q = q;
    if (paging?.offset !== undefined) query.offset = paging.offset;
    if (paging?.limit !== undefined) query.limit = paging.limit;
    return this.call("GET", "/assets", undefined, query) as Promise<
      PageOf<Record<string, unknown>>
    >;
  }

  getAsset(id: number): Promise<Record<string, unknown>> {
    return this.call("GET", `/assets/${id}`) as Promise<
      Record<string, unknown>
    >;
  }

  assetReport(
    groupBy: string,
  ): Promise<{ group_by: string; rows: Array<{ key: unknown; count: number }> }> {
    return this.call("GET", "/assets/report", undefined, {
      group_by: groupBy,
    }) as Promise<{
      group_by: string;
      rows: Array<{ key: unknown; count: number }>;
    }>;
  }

  listGroups(): Promise<PageOf<Record<string, unknown>>> {
    return this.call("GET", "/groups") as Promise<
      PageOf<Record<string, unknown>>
    >;
  }

  // -- space ---------------------------------------------------------------

  listBuildings(): Promise<{ items: Array<Record<string, unknown>> }> {
    return this.call("GET", "/buildings") as Promise<{
      items: Array<Record<string, unknown>>;
    }>;
  }

  locationFields(): Promise<{ fields: SearchField[] }> {
    return this.call("GET", "/locations/fields") as Promise<{
      fields: SearchField[];
    }>;
  }

  searchLocations(
    filters: Record<string, string>,
  ): Promise<PageOf<Record<string, unknown>>> {
    return this.call("GET", "/locations", undefined, filters) as Promise<
      PageOf<Record<string, unknown>>
    >;
  }

  // -- software --------------------------------------------------------------

  listSoftware(): Promise<PageOf<Record<string, unknown>>> {
    return this.call("GET", "/software") as Promise<
      PageOf<Record<string, unknown>>
    >;
  }

  expiringLicenses(days: number): Promise<{
    expiring: Array<Record<string, unknown>>;
    expired: Array<Record<string, unknown>>;
  }> {
    return this.call("GET", "/licenses/expiring", undefined, {
      days,
    }) as Promise<{
      expiring: Array<Record<string, unknown>>;
      expired: Array<Record<string, unknown>>;
    }>;
  }

  // -- requests ----------------------------------------------------------------

  searchRequests(params: {
    statuses: string[];
    categories?: string[];
    offset?: number;
    limit?: number;
  }): Promise<PageOf<Record<string, unknown>>> {
    const query: Query = { status: params.statuses };
    if (params.categories?.length) query.category = params.categories;
    if (params.offset !== undefined) query.offset = params.offset;
    if (params.limit !== undefined) query.limit = params.limit;
    return this.call("GET", "/requests", undefined, query) as Promise<
      PageOf<Record<string, unknown>>
    >;
  }

  submitGeneralRequest(
    category: string,
    description: string,
  ): Promise<{ RequestID: number }> {
    return this.call("POST", "/requests/general", {
      Category: category,
      Description: description,
    }) as Promise<{ RequestID: number }>;
  }

  submitSpecificRequest(body: {
    Category: string;
    Description?: string;
    BarCode?: string;
    LocationName?: string;
    GroupID?: number;
    UserName?: string;
    CompartmentNo?: number;
  }): Promise<{ RequestID: number }> {
    return this.call("POST", "/requests/specific", body) as Promise<{
      RequestID: number;
    }>;
  }

  closeRequest(id: number, note: string): Promise<Record<string, unknown>> {
    return this.call("POST", `/requests/${id}/close`, {
      Note: note,
    }) as Promise<Record<string, unknown>>;
  }

  approveRequest(id: number): Promise<Record<string, unknown>> {
    return this.call("POST", `/requests/${id}/approve`, {}) as Promise<
      Record<string, unknown>
    >;
  }

  // -- administration --------------------------------------------------------------

  roleGrants(
    roleId: number,
  ): Promise<{ role_id: number; grants: Record<string, boolean> }> {
    return this.call("GET", `/admin/roles/${roleId}/grants`) as Promise<{
      role_id: number;
      grants: Record<string, boolean>;
    }>;
  }

  setGrant(
    roleId: number,
    permission: string,
    authorize: boolean,
  ): Promise<{ role_id: number; grants: Record<string, boolean> }> {
    return this.call("PUT", `/admin/roles/${roleId}/grants`, {
      permission,
      authorize,
    }) as Promise<{ role_id: number; grants: Record<string, boolean> }>;
  }
}
