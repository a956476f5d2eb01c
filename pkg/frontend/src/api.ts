/**
 * Typed client for the dictionary JSON API. Used for search and navigation
 * only; gloss payloads ship inside the page documents themselves.
 */

export interface LookupOk {
  slug: string;
}

export interface LookupMiss {
  found: false;
  reason: "no_such_lemma" | "rows_only";
  suggestions: string[];
}

export type LookupResult = LookupOk | LookupMiss;

export interface SearchHit {
  slug: string;
  snippet: string;
  score: number;
}

export interface SearchGroup {
  rubric: string;
  hits: SearchHit[];
}

export interface SearchResponse {
  query: string;
  total: number;
  page: number;
  pages: number;
  groups: SearchGroup[];
}

export interface IndexEntry {
  lemma: string;
  pos: string;
  slug: string;
}

export interface AlphaIndex {
  language: string;
  entries: IndexEntry[];
}

export interface LegendEntry {
  kind: string;
  key: string;
  glyph: string;
  label: string;
}

export type Fetcher = (url: string) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status: number, readonly body?: unknown) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly base = "",
    private readonly fetcher: Fetcher = (url) => fetch(url),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    let response: Response;
    try {
      response = await this.fetcher(this.base + path);
    } catch (err) {
      throw new ApiError(`network failure: ${String(err)}`, 0);
    }
    const body = await response.json().catch(() => undefined);
    if (!response.ok) {
      throw new ApiError(`request failed: ${path}`, response.status, body);
    }
    return body as T;
  }

  /** Route a lemma to its page; a 404 carries the miss variant. */
  async lookup(lemma: string, lang: string): Promise<LookupResult> {
    try {
      return await this.getJson<LookupOk>(
        `/api/lookup?lemma=${encodeURIComponent(lemma)}&lang=${lang}`,
      );
    } catch (err) {
      if (err instanceof ApiError && err.status === 404 && err.body) {
        return err.body as LookupMiss;
      }
      throw err;
    }
  }

  search(query: string, n: number, page = 1): Promise<SearchResponse> {
    return this.getJson(
      `/api/search?q=${encodeURIComponent(query)}&n=${n}&page=${page}`,
    );
  }

  alphaIndex(lang: string): Promise<AlphaIndex> {
    return this.getJson(`/api/index/${lang}`);
  }

  legend(): Promise<LegendEntry[]> {
    return this.getJson("/api/legend");
  }
}
