/* tslint:disable */
/* eslint-disable */

/**
 * Slider state from the page.
 */
export class DemoParams {
    free(): void;
    [Symbol.dispose](): void;
    constructor();
    b_nonuniform: number;
    b_uniform: number;
    dt: number;
    eta: number;
    gamma: number;
    j0: number;
    j: number;
    jz: number;
    /**
     * Use the equal-weight sector mixture instead of `mu`.
     */
    mixture: boolean;
    /**
     * Sector μ ∈ {-1, 0, 1}.
     */
    mu: number;
    t_max: number;
    theta: number;
}

export function concurrence_map_svg(p: DemoParams, b_min: number, b_max: number, count: number, time_samples: number): string;

export function measures_svg(p: DemoParams): string;

export function rotated_coherence_svg(p: DemoParams, phi: number, varphi: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demoparams_free: (a: number, b: number) => void;
    readonly __wbg_get_demoparams_b_nonuniform: (a: number) => number;
    readonly __wbg_get_demoparams_b_uniform: (a: number) => number;
    readonly __wbg_get_demoparams_dt: (a: number) => number;
    readonly __wbg_get_demoparams_eta: (a: number) => number;
    readonly __wbg_get_demoparams_gamma: (a: number) => number;
    readonly __wbg_get_demoparams_j: (a: number) => number;
    readonly __wbg_get_demoparams_j0: (a: number) => number;
    readonly __wbg_get_demoparams_jz: (a: number) => number;
    readonly __wbg_get_demoparams_mixture: (a: number) => number;
    readonly __wbg_get_demoparams_mu: (a: number) => number;
    readonly __wbg_get_demoparams_t_max: (a: number) => number;
    readonly __wbg_get_demoparams_theta: (a: number) => number;
    readonly __wbg_set_demoparams_b_nonuniform: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_b_uniform: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_dt: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_eta: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_gamma: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_j: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_j0: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_jz: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_mixture: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_mu: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_t_max: (a: number, b: number) => void;
    readonly __wbg_set_demoparams_theta: (a: number, b: number) => void;
    readonly concurrence_map_svg: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly demoparams_new: () => number;
    readonly measures_svg: (a: number) => [number, number, number, number];
    readonly rotated_coherence_svg: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
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
