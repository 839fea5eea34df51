import { PINBOARD_LIMIT, type PinnedRun } from "../state";
import { CRITERIA, CRITERIA_LABELS } from "../types";

export function renderPinboard(
  container: HTMLElement,
  pins: PinnedRun[],
  onUnpin: (index: number) => void,
): void {
  container.innerHTML = "";
  const header = document.createElement("p");
  header.className = "pinboard-header";
  header.textContent = `Pinned runs (${pins.length}/${PINBOARD_LIMIT})`;
  container.appendChild(header);

  if (pins.length === 0) {
    const empty = document.createElement("p");
    empty.className = "placeholder";
    empty.textContent = "Pin a projection to compare runs.";
    container.appendChild(empty);
    return;
  }

  const table = document.createElement("table");
  table.className = "pinboard-table";
  const head = table.createTHead().insertRow();
  head.appendChild(document.createElement("th")).textContent = "Run";
  for (const criterion of CRITERIA) {
    const th = document.createElement("th");
    th.textContent = CRITERIA_LABELS[criterion];
    head.appendChild(th);
  }
  head.appendChild(document.createElement("th"));

  const body = table.createTBody();
  pins.forEach((pin, index) => {
    const tr = body.insertRow();
    tr.insertCell().textContent = pin.label;
    for (const criterion of CRITERIA) {
      const td = tr.insertCell();
      td.className = "index-value";
      td.textContent = String(pin.result.index[criterion]);
    }
    const actions = tr.insertCell();
    const remove = document.createElement("button");
    remove.textContent = "unpin";
    remove.addEventListener("click", () => onUnpin(index));
    actions.appendChild(remove);
  });
  container.appendChild(table);
}
