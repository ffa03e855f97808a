/* Submit-locking: while a form's request is in flight the form refuses
 * further submits and its buttons are disabled.  The lock is per form,
 * so a slow close on one request row never blocks the row next to it. */

import { HttpError } from "./api.js";

export type SubmitHandler = (event: SubmitEvent) => Promise<void> | void;

/** Text worth showing a person for a failure. */
export function reason(error: unknown): string {
  if (error instanceof HttpError) {
    return `${error.detail.message} (${error.code})`;
  }
  return error instanceof Error ? error.message : String(error);
}

export function guardSubmit(
  form: HTMLFormElement,
  handler: SubmitHandler,
): void {
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (form.dataset.busy === "1") return;
    form.dataset.busy = "1";
    const buttons = [...form.querySelectorAll("button")].filter(
      (b) => b.type !== "button",
    );
    for (const button of buttons) button.disabled = true;
    void Promise.resolve()
      .then(() => handler(event))
      .catch(() => {
        /* the handler reports its own errors into the page */
      })
      .finally(() => {
        delete form.dataset.busy;
        for (const button of buttons) button.disabled = false;
      });
  });
}

/** Render an error from the service into a form's message slot. */
export function showError(form: HTMLFormElement, message: string): void {
  let slot = form.querySelector<HTMLElement>(".form-error");
  if (!slot) {
    slot = document.createElement("p");
    slot.className = "form-error";
    form.append(slot);
  }
  slot.textContent = message;
}

export function clearError(form: HTMLFormElement): void {
  form.querySelector(".form-error")?.remove();
}
