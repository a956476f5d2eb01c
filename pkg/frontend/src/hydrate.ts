/**
 * Hydration of an emitted dictionary page. Everything needed for glosses is
 * already inside the document (inline payload blocks plus data attributes),
 * so hydration performs no network requests at all: it binds clicks on the
 * words, wires color-matched highlighting of corresponding glosses, and
 * makes legend cells explain themselves.
 */

import { PopupManager } from "./popups";

export interface HydrationStats {
  boundWords: number;
  inertWords: number;
  distinctColors: number;
}

/** Distinct color indices used by the page payloads (NO_COLOR = -1 ignored). */
export function distinctColors(root: ParentNode): Set<number> {
  const colors = new Set<number>();
  root.querySelectorAll<HTMLElement>("#popups .popup-payload").forEach((el) => {
    const color = Number(el.dataset.color ?? "-1");
    if (color >= 0) colors.add(color);
  });
  return colors;
}

function highlight(root: ParentNode, color: number, on: boolean): void {
  if (color < 0) return;
  root.querySelectorAll<HTMLElement>(`[data-color="${color}"]`).forEach((el) => {
    el.classList.toggle("same-color", on);
  });
}

export function hydratePage(root: ParentNode, popups: PopupManager): HydrationStats {
  const stats: HydrationStats = { boundWords: 0, inertWords: 0, distinctColors: 0 };
  stats.distinctColors = distinctColors(root).size;

  const payloadFor = (word: HTMLElement): HTMLElement | null => {
    const senseId = word.dataset.senseId;
    if (senseId) {
      return root.querySelector<HTMLElement>(
        `#popups .popup-payload[data-for-sense="${senseId}"]`,
      );
    }
    if (word.dataset.descriptive) {
      // display form only capitalizes the first letter; compare casefolded
      const text = (word.textContent ?? "").trim().toLowerCase();
      const candidates = root.querySelectorAll<HTMLElement>(
        "#popups .popup-payload[data-for-descriptive]",
      );
      for (const el of candidates) {
        if ((el.dataset.forDescriptive ?? "").toLowerCase() === text) return el;
      }
      return null;
    }
    return null;
  };

  root.querySelectorAll<HTMLElement>(".word, .headword").forEach((word) => {
    const payload = payloadFor(word);
    if (!payload) {
      // leave the word inert but visible; a warning helps the editor
      if (!word.dataset.url && !word.dataset.lexemeId) {
        stats.inertWords += 1;
        console.warn(`no pop-up payload for word: ${word.textContent}`);
      }
      return;
    }
    stats.boundWords += 1;
    word.setAttribute("tabindex", "0");
    word.addEventListener("click", () => {
      const wasAnchor = popups.currentAnchor === word;
      const color = Number(payload.dataset.color ?? "-1");
      highlight(root, color, false);
      popups.toggle(word, payload);
      if (!wasAnchor) highlight(root, color, true);
    });
  });

  // external warning links (row 5): plain navigation targets
  root.querySelectorAll<HTMLElement>(".word.warning[data-url]").forEach((word) => {
    word.classList.add("linked");
  });

  // legend cells explain themselves from their own inline content
  root.querySelectorAll<HTMLElement>(".legend-cell").forEach((cell) => {
    cell.addEventListener("click", () => {
      const note = cell.ownerDocument.createElement("div");
      note.className = "popup-payload legend-note";
      note.textContent = `${cell.dataset.key}: ${
        cell.querySelector(".legend-label")?.textContent ?? ""
      }`;
      popups.open(cell, note);
    });
  });

  return stats;
}

/** Parse the page JSON embedded by the emitter (the hydration source). */
export function embeddedPageData(root: ParentNode): unknown {
  const script = root.querySelector("#page-data");
  if (!script || !script.textContent) return null;
  return JSON.parse(script.textContent.replace(/<\\\//g, "</"));
}
