// Trailing-edge debounce: rapid calls collapse into one invocation with the
// last arguments once input settles. Used so a slider drag issues exactly
// one request per settled value.

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
  flush(): void;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: A | null = null;

  const debounced = (...args: A): void => {
    pending = args;
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      const args2 = pending as A;
      pending = null;
      fn(...args2);
    }, waitMs);
  };

  debounced.cancel = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
    pending = null;
  };

  debounced.flush = () => {
    if (timer !== null && pending !== null) {
      clearTimeout(timer);
      timer = null;
      const args = pending;
      pending = null;
      fn(...args);
    }
  };

  return debounced;
}

// Latest-wins guard for in-flight requests: starting a new run aborts the
// previous one, and stale resolutions are dropped.
export class LatestRun<T> {
  private controller: AbortController | null = null;
  private sequence = 0;

  async run(task: (signal: AbortSignal) => Promise<T>): Promise<T | undefined> {
    this.controller?.abort();
    this.controller = new AbortController();
    const ticket = ++this.sequence;
    try {
      const result = await task(this.controller.signal);
      return ticket === this.sequence ? result : undefined;
    } catch (error) {
      if ((error as Error).name === "AbortError") {
        return undefined;
      }
      if (ticket !== this.sequence) {
        return undefined;
      }
      throw error;
    }
  }
}
