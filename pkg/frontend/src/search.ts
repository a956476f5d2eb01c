/**
 * Search and navigation view: one input drives lemma lookup first, then
 * combined search with rubric-grouped, paginated results. The alphabetical
 * browse renders per language with part-of-speech strata. API problems show
 * up as a visible notice, never as silence.
 */

import { ApiClient, SearchResponse } from "./api";

const RUBRIC_TITLES: Record<string, string> = {
  page: "Основная страница",
  in_page_text: "Встречаемость в текстах словаря",
  corpus_excerpt: "Выборки из национальных корпусов",
  co_positioned_pair: "Соположенные пары",
  ted_catalog: "Типология экспансивных действий",
  link_catalog: "Каталог ссылок",
};

const POS_TITLES: Record<string, string> = {
  verb: "Глаголы",
  noun: "Существительные",
  adjective: "Прилагательные",
  adverb: "Наречия",
};

export type Navigate = (slug: string) => void;

export class SearchView {
  readonly element: HTMLElement;
  private readonly input: HTMLInputElement;
  private readonly langSelect: HTMLSelectElement;
  private readonly notice: HTMLElement;
  private readonly results: HTMLElement;

  constructor(
    private readonly doc: Document,
    private readonly api: ApiClient,
    private readonly navigate: Navigate,
    private readonly hitsPerPage = 10,
  ) {
    this.element = doc.createElement("section");
    this.element.className = "search-view";
    this.element.innerHTML = `
      <form class="search-form">
        <input class="search-input" type="search" placeholder="Поиск" />
        <select class="search-lang"><option value="ru">рус</option><option value="bg">болг</option></select>
        <button type="submit">Поиск</button>
        <button type="button" class="legend-button">Легенда</button>
      </form>
      <div class="search-notice" role="alert" hidden></div>
      <div class="search-results"></div>`;
    this.input = this.element.querySelector(".search-input") as HTMLInputElement;
    this.langSelect = this.element.querySelector(".search-lang") as HTMLSelectElement;
    this.notice = this.element.querySelector(".search-notice") as HTMLElement;
    this.results = this.element.querySelector(".search-results") as HTMLElement;
    (this.element.querySelector(".search-form") as HTMLFormElement).addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        void this.submit();
      },
    );
    (this.element.querySelector(".legend-button") as HTMLButtonElement).addEventListener(
      "click",
      () => void this.showLegend(),
    );
  }

  /** Reference-base help fetched from the legend endpoint. */
  async showLegend(): Promise<void> {
    try {
      const entries = await this.api.legend();
      this.results.textContent = "";
      const panel = this.doc.createElement("table");
      panel.className = "legend-panel";
      for (const entry of entries) {
        const row = this.doc.createElement("tr");
        row.innerHTML = `<td class="legend-glyph"></td><td class="legend-label"></td>`;
        (row.children[0] as HTMLElement).textContent = entry.glyph;
        (row.children[1] as HTMLElement).textContent = entry.label;
        panel.appendChild(row);
      }
      this.results.appendChild(panel);
    } catch (err) {
      this.say(`Ошибка запроса: ${String(err)}`);
    }
  }

  private say(message: string): void {
    this.notice.textContent = message;
    this.notice.hidden = message === "";
  }

  /** Lookup first; a header hit navigates, otherwise combined search runs. */
  async submit(): Promise<void> {
    const query = this.input.value.trim();
    this.say("");
    if (!query) {
      this.say("Введите слово для поиска.");
      return;
    }
    const lang = this.langSelect.value;
    try {
      const routed = await this.api.lookup(query, lang);
      if ("slug" in routed) {
        this.navigate(routed.slug);
        return;
      }
      if (routed.reason === "rows_only") {
        this.say(
          "Слова нет в алфавитном списке — показан комбинированный поиск.",
        );
      }
      await this.runCombined(query, 1);
    } catch (err) {
      this.say(`Ошибка запроса: ${String(err)}`);
    }
  }

  async runCombined(query: string, page: number): Promise<void> {
    try {
      const response = await this.api.search(query, this.hitsPerPage, page);
      this.renderResults(response);
    } catch (err) {
      this.say(`Ошибка запроса: ${String(err)}`);
    }
  }

  private renderResults(response: SearchResponse): void {
    this.results.textContent = "";
    if (response.total === 0) {
      this.say("Ничего не найдено.");
      return;
    }
    for (const group of response.groups) {
      const section = this.doc.createElement("div");
      section.className = "rubric-group";
      section.dataset.rubric = group.rubric;
      const heading = this.doc.createElement("h3");
      heading.textContent = RUBRIC_TITLES[group.rubric] ?? group.rubric;
      section.appendChild(heading);
      const list = this.doc.createElement("ul");
      for (const hit of group.hits) {
        const item = this.doc.createElement("li");
        const link = this.doc.createElement("a");
        link.textContent = hit.snippet;
        link.href = `#/page/${hit.slug}`;
        link.addEventListener("click", (event) => {
          event.preventDefault();
          if (hit.slug) this.navigate(hit.slug);
        });
        item.appendChild(link);
        list.appendChild(item);
      }
      section.appendChild(list);
      this.results.appendChild(section);
    }
    if (response.pages > 1) {
      const pager = this.doc.createElement("nav");
      pager.className = "pager";
      for (let n = 1; n <= response.pages; n += 1) {
        const button = this.doc.createElement("button");
        button.textContent = String(n);
        button.disabled = n === response.page;
        button.addEventListener("click", () => void this.runCombined(response.query, n));
        pager.appendChild(button);
      }
      this.results.appendChild(pager);
    }
  }

  /** Alphabetical browse: POS strata per language, entries navigate. */
  async renderAlphaBrowse(lang: string): Promise<HTMLElement> {
    const container = this.doc.createElement("div");
    container.className = "alpha-browse";
    container.dataset.language = lang;
    try {
      const index = await this.api.alphaIndex(lang);
      let currentPos = "";
      let list: HTMLElement | null = null;
      for (const entry of index.entries) {
        if (entry.pos !== currentPos) {
          currentPos = entry.pos;
          const heading = this.doc.createElement("h4");
          heading.textContent = POS_TITLES[entry.pos] ?? entry.pos;
          container.appendChild(heading);
          list = this.doc.createElement("ul");
          list.dataset.pos = entry.pos;
          container.appendChild(list);
        }
        const item = this.doc.createElement("li");
        const link = this.doc.createElement("a");
        link.textContent = entry.lemma;
        link.href = `#/page/${entry.slug}`;
        link.addEventListener("click", (event) => {
          event.preventDefault();
          this.navigate(entry.slug);
        });
        item.appendChild(link);
        list?.appendChild(item);
      }
    } catch (err) {
      const failure = this.doc.createElement("div");
      failure.className = "search-notice";
      failure.textContent = `Ошибка запроса: ${String(err)}`;
      container.appendChild(failure);
    }
    return container;
  }
}
