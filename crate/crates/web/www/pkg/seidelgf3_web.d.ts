/* tslint:disable */
/* eslint-disable */

/**
 * Seidel (or adjacency) polynomial of a graph given as an expression or
 * graph6 string.
 */
export function charpoly(input: string, adjacency: boolean): string;

/**
 * A witness graph for `x^r (x-1)^s (x+1)^t`, or the reason there is none.
 */
export function realize(r: number, s: number, t: number, extended: boolean): string;

/**
 * Signed Seidel matrix (entries -1, 0, 1) for drawing, with the graph's
 * graph6 code and, for cographs, an expression.
 */
export function seidel_matrix(input: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly charpoly: (a: number, b: number, c: number) => [number, number];
    readonly realize: (a: number, b: number, c: number, d: number) => [number, number];
    readonly seidel_matrix: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
