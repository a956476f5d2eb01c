/**
 * Application shell: hash navigation between pages, the search bar on top,
 * static page documents fetched once and hydrated in place. Gloss pop-ups
 * come from the page document itself; the API serves search, the browse
 * indices and the legend only.
 */

import { ApiClient } from "./api";
import { hydratePage } from "./hydrate";
import { PopupManager } from "./popups";
import { SearchView } from "./search";

export class App {
  private readonly popups: PopupManager;
  private readonly search: SearchView;
  private readonly pageHost: HTMLElement;

  constructor(
    private readonly doc: Document,
    api: ApiClient,
    private readonly fetchText: (url: string) => Promise<string> = async (url) => {
      const response = await fetch(url);
      if (!response.ok) throw new Error(`failed to fetch ${url}`);
      return response.text();
    },
  ) {
    this.popups = new PopupManager(doc);
    this.search = new SearchView(doc, api, (slug) => void this.showPage(slug));
    this.pageHost = doc.createElement("main");
    this.pageHost.className = "page-host";
    doc.body.prepend(this.pageHost);
    doc.body.prepend(this.search.element);
    doc.defaultView?.addEventListener("hashchange", () => void this.route());
  }

  async route(): Promise<void> {
    const hash = this.doc.defaultView?.location.hash ?? "";
    const match = /^#\/page\/([A-Z0-9-]+)$/.exec(hash);
    if (match) await this.showPage(match[1]);
  }

  /** Load an emitted page document and hydrate its body in place. */
  async showPage(slug: string): Promise<void> {
    this.popups.close();
    const html = await this.fetchText(`/pages/${slug}.html`);
    const parsed = new DOMParser().parseFromString(html, "text/html");
    this.pageHost.textContent = "";
    for (const child of Array.from(parsed.body.children)) {
      this.pageHost.appendChild(this.doc.importNode(child, true));
    }
    hydratePage(this.pageHost, this.popups);
    if (this.doc.defaultView) {
      const target = `#/page/${slug}`;
      if (this.doc.defaultView.location.hash !== target) {
        this.doc.defaultView.location.hash = target;
      }
    }
  }

  async showBrowse(lang: string): Promise<void> {
    const browse = await this.search.renderAlphaBrowse(lang);
    this.pageHost.textContent = "";
    this.pageHost.appendChild(browse);
  }
}

export function start(doc: Document): App {
  const app = new App(doc, new ApiClient());
  void app.route();
  return app;
}
