/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demoparams_free: (a: number, b: number) => void;
export const __wbg_get_demoparams_b_nonuniform: (a: number) => number;
export const __wbg_get_demoparams_b_uniform: (a: number) => number;
export const __wbg_get_demoparams_dt: (a: number) => number;
export const __wbg_get_demoparams_eta: (a: number) => number;
export const __wbg_get_demoparams_gamma: (a: number) => number;
export const __wbg_get_demoparams_j: (a: number) => number;
export const __wbg_get_demoparams_j0: (a: number) => number;
export const __wbg_get_demoparams_jz: (a: number) => number;
export const __wbg_get_demoparams_mixture: (a: number) => number;
export const __wbg_get_demoparams_mu: (a: number) => number;
export const __wbg_get_demoparams_t_max: (a: number) => number;
export const __wbg_get_demoparams_theta: (a: number) => number;
export const __wbg_set_demoparams_b_nonuniform: (a: number, b: number) => void;
export const __wbg_set_demoparams_b_uniform: (a: number, b: number) => void;
export const __wbg_set_demoparams_dt: (a: number, b: number) => void;
export const __wbg_set_demoparams_eta: (a: number, b: number) => void;
export const __wbg_set_demoparams_gamma: (a: number, b: number) => void;
export const __wbg_set_demoparams_j: (a: number, b: number) => void;
export const __wbg_set_demoparams_j0: (a: number, b: number) => void;
export const __wbg_set_demoparams_jz: (a: number, b: number) => void;
export const __wbg_set_demoparams_mixture: (a: number, b: number) => void;
export const __wbg_set_demoparams_mu: (a: number, b: number) => void;
export const __wbg_set_demoparams_t_max: (a: number, b: number) => void;
export const __wbg_set_demoparams_theta: (a: number, b: number) => void;
export const concurrence_map_svg: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const demoparams_new: () => number;
export const measures_svg: (a: number) => [number, number, number, number];
export const rotated_coherence_svg: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
