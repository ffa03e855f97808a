/* Visit history lives entirely in the client: the server never learns
 * which pages a user opens.  The footer's frequent-pages strip ranks by
 * visit count, ties broken by recency. */

export interface Visit {
  path: string;
  title: string;
  count: number;
  lastSeq: number;
}

export interface VisitStore {
  load(): Visit[] | null;
  save(visits: Visit[]): void;
}

const STORAGE_KEY = "uuis.visits";

export function browserStore(): VisitStore {
  return {
    load() {
      try {
        const raw = window.localStorage.getItem(STORAGE_KEY);
        return raw ? (JSON.parse(raw) as Visit[]) : null;
      } catch {
        return null;
      }
    },
    save(visits) {
      try {
        window.localStorage.setItem(STORAGE_KEY, JSON.stringify(visits));
      } catch {
        /* storage may be unavailable; history then lasts one session */
      }
    },
  };
}

export class VisitHistory {
  private visits = new Map<string, Visit>();
  private seq = 0;

  constructor(private readonly store?: VisitStore) {
    const saved = store?.load();
    if (saved) {
      for (const visit of saved) {
        this.visits.set(visit.path, { ...visit });
        this.seq = Math.max(this.seq, visit.lastSeq);
      }
    }
  }

  record(path: string, title: string): void {
    this.seq += 1;
    const existing = this.visits.get(path);
    if (existing) {
      existing.count += 1;
      existing.lastSeq = this.seq;
      existing.title = title;
    } else {
      this.visits.set(path, { path, title, count: 1, lastSeq: this.seq });
    }
    this.store?.save([...this.visits.values()]);
  }

  top(n = 5): Visit[] {
    return [...this.visits.values()]
      .sort((a, b) => b.count - a.count || b.lastSeq - a.lastSeq)
      .slice(0, n);
  }

  clear(): void {
    this.visits.clear();
    this.seq = 0;
    this.store?.save([]);
  }
}
