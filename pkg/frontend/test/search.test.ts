import { readFileSync } from "node:fs";
import { join } from "node:path";

import { beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api";
import { SearchView } from "../src/search";

const FIXTURES = join(__dirname, "fixtures");

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Fake API backed by the fixture indices, mimicking the serve contract. */
function fakeFetcher(url: string): Promise<Response> {
  const parsed = new URL(url, "http://dict.test");
  if (parsed.pathname === "/api/lookup") {
    const lemma = parsed.searchParams.get("lemma");
    if (lemma === "вешать") return Promise.resolve(jsonResponse({ slug: "VESHAT-BESYA" }));
    if (lemma === "браня") {
      return Promise.resolve(
        jsonResponse(
          { found: false, reason: "rows_only", suggestions: ["BRANIT-MAMRYA"] },
          404,
        ),
      );
    }
    return Promise.resolve(
      jsonResponse({ found: false, reason: "no_such_lemma", suggestions: [] }, 404),
    );
  }
  if (parsed.pathname === "/api/search") {
    const q = parsed.searchParams.get("q");
    if (q === "браня") {
      return Promise.resolve(
        jsonResponse({
          query: q,
          total: 1,
          page: 1,
          pages: 1,
          groups: [
            {
              rubric: "in_page_text",
              hits: [{ slug: "BRANIT-MAMRYA", snippet: "браня: защищать", score: 20 }],
            },
          ],
        }),
      );
    }
    return Promise.resolve(
      jsonResponse({ query: q, total: 0, page: 1, pages: 1, groups: [] }),
    );
  }
  if (parsed.pathname === "/api/legend") {
    const body = readFileSync(join(FIXTURES, "legend.json"), "utf-8");
    return Promise.resolve(
      new Response(body, { status: 200, headers: { "content-type": "application/json" } }),
    );
  }
  if (parsed.pathname.startsWith("/api/index/")) {
    const lang = parsed.pathname.split("/").pop();
    const body = readFileSync(join(FIXTURES, `alpha_${lang}.json`), "utf-8");
    return Promise.resolve(
      new Response(body, { status: 200, headers: { "content-type": "application/json" } }),
    );
  }
  return Promise.resolve(jsonResponse({ error: "unknown" }, 404));
}

describe("SearchView", () => {
  let navigate: ReturnType<typeof vi.fn>;
  let view: SearchView;

  beforeEach(() => {
    document.body.innerHTML = "";
    navigate = vi.fn();
    view = new SearchView(document, new ApiClient("", fakeFetcher), navigate);
    document.body.appendChild(view.element);
  });

  function type(query: string): void {
    (view.element.querySelector(".search-input") as HTMLInputElement).value = query;
  }

  it("navigates straight to the routed page for a header lemma", async () => {
    type("вешать");
    await view.submit();
    expect(navigate).toHaveBeenCalledWith("VESHAT-BESYA");
  });

  it("falls back to combined search for a rows-only word", async () => {
    type("браня");
    (view.element.querySelector(".search-lang") as HTMLSelectElement).value = "bg";
    await view.submit();
    expect(navigate).not.toHaveBeenCalled();
    const notice = view.element.querySelector(".search-notice") as HTMLElement;
    expect(notice.hidden).toBe(false);
    const group = view.element.querySelector(".rubric-group") as HTMLElement;
    expect(group.dataset.rubric).toBe("in_page_text");
    (group.querySelector("a") as HTMLElement).click();
    expect(navigate).toHaveBeenCalledWith("BRANIT-MAMRYA");
  });

  it("rejects an empty query with a visible message", async () => {
    type("   ");
    await view.submit();
    const notice = view.element.querySelector(".search-notice") as HTMLElement;
    expect(notice.hidden).toBe(false);
    expect(notice.textContent).toContain("Введите");
    expect(navigate).not.toHaveBeenCalled();
  });

  it("surfaces API failures as a notice, not silence", async () => {
    const failing = new SearchView(
      document,
      new ApiClient("", () => Promise.reject(new Error("connection refused"))),
      navigate,
    );
    document.body.appendChild(failing.element);
    (failing.element.querySelector(".search-input") as HTMLInputElement).value = "лгать";
    await failing.submit();
    const notice = failing.element.querySelector(".search-notice") as HTMLElement;
    expect(notice.hidden).toBe(false);
    expect(notice.textContent).toContain("Ошибка");
  });

  it("shows the reference-base legend fetched from the API", async () => {
    (view.element.querySelector(".legend-button") as HTMLButtonElement).click();
    await new Promise((resolve) => setTimeout(resolve, 0));
    const panel = view.element.querySelector(".legend-panel") as HTMLElement;
    expect(panel).not.toBeNull();
    expect(panel.textContent).toContain("Синхронный гомогенный");
    expect(panel.querySelectorAll("tr").length).toBe(20);
  });

  it("renders the alphabetical browse with POS strata in order", async () => {
    const browse = await view.renderAlphaBrowse("ru");
    document.body.appendChild(browse);
    const headings = Array.from(browse.querySelectorAll("h4")).map(
      (h) => h.textContent,
    );
    expect(headings[0]).toBe("Глаголы");
    expect(headings).toContain("Существительные");
    const strata = Array.from(browse.querySelectorAll("ul")).map(
      (ul) => (ul as HTMLElement).dataset.pos,
    );
    const order = ["verb", "noun", "adjective", "adverb"];
    const positions = strata.map((s) => order.indexOf(s ?? ""));
    expect(positions).toEqual([...positions].sort((a, b) => a - b));
    const lgat = Array.from(browse.querySelectorAll("a")).find(
      (a) => a.textContent === "лгать",
    );
    lgat!.click();
    expect(navigate).toHaveBeenCalledWith("LGAT-LAZHA");
  });
});
