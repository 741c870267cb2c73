/* @ts-self-types="./spinchain_web.d.ts" */

/**
 * Slider state from the page.
 */
export class DemoParams {
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        DemoParamsFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_demoparams_free(ptr, 0);
    }
    constructor() {
        const ret = wasm.demoparams_new();
        this.__wbg_ptr = ret;
        DemoParamsFinalization.register(this, this.__wbg_ptr, this);
        return this;
    }
    /**
     * @returns {number}
     */
    get b_nonuniform() {
        const ret = wasm.__wbg_get_demoparams_b_nonuniform(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get b_uniform() {
        const ret = wasm.__wbg_get_demoparams_b_uniform(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get dt() {
        const ret = wasm.__wbg_get_demoparams_dt(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get eta() {
        const ret = wasm.__wbg_get_demoparams_eta(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get gamma() {
        const ret = wasm.__wbg_get_demoparams_gamma(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get j0() {
        const ret = wasm.__wbg_get_demoparams_j0(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get j() {
        const ret = wasm.__wbg_get_demoparams_j(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get jz() {
        const ret = wasm.__wbg_get_demoparams_jz(this.__wbg_ptr);
        return ret;
    }
    /**
     * Use the equal-weight sector mixture instead of `mu`.
     * @returns {boolean}
     */
    get mixture() {
        const ret = wasm.__wbg_get_demoparams_mixture(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * Sector μ ∈ {-1, 0, 1}.
     * @returns {number}
     */
    get mu() {
        const ret = wasm.__wbg_get_demoparams_mu(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get t_max() {
        const ret = wasm.__wbg_get_demoparams_t_max(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get theta() {
        const ret = wasm.__wbg_get_demoparams_theta(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set b_nonuniform(arg0) {
        wasm.__wbg_set_demoparams_b_nonuniform(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set b_uniform(arg0) {
        wasm.__wbg_set_demoparams_b_uniform(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set dt(arg0) {
        wasm.__wbg_set_demoparams_dt(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set eta(arg0) {
        wasm.__wbg_set_demoparams_eta(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set gamma(arg0) {
        wasm.__wbg_set_demoparams_gamma(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set j0(arg0) {
        wasm.__wbg_set_demoparams_j0(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set j(arg0) {
        wasm.__wbg_set_demoparams_j(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set jz(arg0) {
        wasm.__wbg_set_demoparams_jz(this.__wbg_ptr, arg0);
    }
    /**
     * Use the equal-weight sector mixture instead of `mu`.
     * @param {boolean} arg0
     */
    set mixture(arg0) {
        wasm.__wbg_set_demoparams_mixture(this.__wbg_ptr, arg0);
    }
    /**
     * Sector μ ∈ {-1, 0, 1}.
     * @param {number} arg0
     */
    set mu(arg0) {
        wasm.__wbg_set_demoparams_mu(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set t_max(arg0) {
        wasm.__wbg_set_demoparams_t_max(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set theta(arg0) {
        wasm.__wbg_set_demoparams_theta(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) DemoParams.prototype[Symbol.dispose] = DemoParams.prototype.free;

/**
 * @param {DemoParams} p
 * @param {number} b_min
 * @param {number} b_max
 * @param {number} count
 * @param {number} time_samples
 * @returns {string}
 */
export function concurrence_map_svg(p, b_min, b_max, count, time_samples) {
    let deferred2_0;
    let deferred2_1;
    try {
        _assertClass(p, DemoParams);
        const ret = wasm.concurrence_map_svg(p.__wbg_ptr, b_min, b_max, count, time_samples);
        var ptr1 = ret[0];
        var len1 = ret[1];
        if (ret[3]) {
            ptr1 = 0; len1 = 0;
            throw takeFromExternrefTable0(ret[2]);
        }
        deferred2_0 = ptr1;
        deferred2_1 = len1;
        return getStringFromWasm0(ptr1, len1);
    } finally {
        wasm.__wbindgen_free(deferred2_0, deferred2_1, 1);
    }
}

/**
 * @param {DemoParams} p
 * @returns {string}
 */
export function measures_svg(p) {
    let deferred2_0;
    let deferred2_1;
    try {
        _assertClass(p, DemoParams);
        const ret = wasm.measures_svg(p.__wbg_ptr);
        var ptr1 = ret[0];
        var len1 = ret[1];
        if (ret[3]) {
            ptr1 = 0; len1 = 0;
            throw takeFromExternrefTable0(ret[2]);
        }
        deferred2_0 = ptr1;
        deferred2_1 = len1;
        return getStringFromWasm0(ptr1, len1);
    } finally {
        wasm.__wbindgen_free(deferred2_0, deferred2_1, 1);
    }
}

/**
 * @param {DemoParams} p
 * @param {number} phi
 * @param {number} varphi
 * @returns {string}
 */
export function rotated_coherence_svg(p, phi, varphi) {
    let deferred2_0;
    let deferred2_1;
    try {
        _assertClass(p, DemoParams);
        const ret = wasm.rotated_coherence_svg(p.__wbg_ptr, phi, varphi);
        var ptr1 = ret[0];
        var len1 = ret[1];
        if (ret[3]) {
            ptr1 = 0; len1 = 0;
            throw takeFromExternrefTable0(ret[2]);
        }
        deferred2_0 = ptr1;
        deferred2_1 = len1;
        return getStringFromWasm0(ptr1, len1);
    } finally {
        wasm.__wbindgen_free(deferred2_0, deferred2_1, 1);
    }
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./spinchain_web_bg.js": import0,
    };
}

const DemoParamsFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_demoparams_free(ptr, 1));

function _assertClass(instance, klass) {
    if (!(instance instanceof klass)) {
        throw new Error(`expected instance of ${klass.name}`);
    }
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('spinchain_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
