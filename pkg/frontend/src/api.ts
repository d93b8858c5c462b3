// Thin client over the read-only API with stale-response discarding:
// every request carries a per-slot sequence number; a response whose slot
// has since been re-requested resolves to null and must be ignored.

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

type FetchLike = (url: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export class ApiClient {
  private sequence = new Map<string, number>();

  constructor(
    private baseUrl: string = '',
    private fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  /** GET a path; `slot` groups competing requests (latest wins). */
  async get<T>(path: string, slot?: string): Promise<T | null> {
    const key = slot ?? path;
    const mine = (this.sequence.get(key) ?? 0) + 1;
    this.sequence.set(key, mine);
    const response = await this.fetchFn(this.baseUrl + path);
    if (this.sequence.get(key) !== mine) {
      return null; // a newer request for this slot is in flight or done
    }
    if (!response.ok) {
      throw new ApiError(response.status, `${path} failed with ${response.status}`);
    }
    return (await response.json()) as T;
  }
}

export function encodeFeature(name: string): string {
  return encodeURIComponent(name);
}
