/**
 * Pop-up window manager. The one hard rule: at most one window is active at
 * any instant; opening a new one closes the old one, so the reader never
 * faces a pile of windows. Pop-ups anchor beside their word without
 * covering it, and Escape dismisses the active one.
 */

export class PopupManager {
  private active: HTMLElement | null = null;
  private activeAnchor: HTMLElement | null = null;
  private readonly layer: HTMLElement;

  constructor(private readonly doc: Document) {
    this.layer = doc.createElement("div");
    this.layer.className = "popup-layer";
    doc.body.appendChild(this.layer);
    doc.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Escape") this.close();
    });
  }

  get openCount(): number {
    return this.layer.childElementCount;
  }

  get currentAnchor(): HTMLElement | null {
    return this.activeAnchor;
  }

  /** Show `content` next to `anchor`; any previous window closes first. */
  open(anchor: HTMLElement, content: HTMLElement): HTMLElement {
    this.close();
    const popup = content.cloneNode(true) as HTMLElement;
    popup.classList.add("popup-open");
    popup.removeAttribute("hidden");
    this.position(anchor, popup);
    this.layer.appendChild(popup);
    this.active = popup;
    this.activeAnchor = anchor;
    return popup;
  }

  /** Toggle behaviour for repeat clicks on the same word. */
  toggle(anchor: HTMLElement, content: HTMLElement): void {
    if (this.activeAnchor === anchor) {
      this.close();
      return;
    }
    this.open(anchor, content);
  }

  close(): void {
    if (this.active) {
      this.active.remove();
      this.active = null;
      this.activeAnchor = null;
    }
  }

  /** Place the window adjacent to the word, below and slightly right, never
   * on top of it; flips above when the viewport bottom is too close. */
  private position(anchor: HTMLElement, popup: HTMLElement): void {
    const rect = anchor.getBoundingClientRect();
    const view = this.doc.defaultView;
    const scrollX = view ? view.scrollX : 0;
    const scrollY = view ? view.scrollY : 0;
    let top = rect.bottom + scrollY + 6;
    if (view && rect.bottom + 180 > view.innerHeight) {
      top = rect.top + scrollY - 186;
    }
    popup.style.position = "absolute";
    popup.style.left = `${Math.max(0, rect.left + scrollX)}px`;
    popup.style.top = `${Math.max(0, top)}px`;
  }
}
