#pragma once

// Vectorized double-precision cos and log for 4 lanes (AVX2 + FMA), after the
// classic Cephes polynomial routines. Accuracy is a few ulp on the domains the
// kernels use: |x| <~ 1e6 for cos, x in [1e-300, 4] for log. No inf/nan
// handling; callers guarantee finite, in-range inputs.
//
// This header requires -mavx2 -mfma; include it only from translation units
// compiled with those flags.

#include <immintrin.h>

namespace homsense::kernels::detail {

inline __m256d cos4(__m256d x) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
    const __m256d four_over_pi = _mm256_set1_pd(1.2732395447351626862);
    // pi/4 split into three parts for extended-precision argument reduction.
    const __m256d dp1 = _mm256_set1_pd(7.85398125648498535156e-1);
    const __m256d dp2 = _mm256_set1_pd(3.77489470793079817668e-8);
    const __m256d dp3 = _mm256_set1_pd(2.69515142907905952645e-15);

    __m256d xa = _mm256_and_pd(x, abs_mask);
    __m256d y = _mm256_floor_pd(_mm256_mul_pd(xa, four_over_pi));

    __m128i j = _mm256_cvtpd_epi32(y);  // y is integral and < 2^31
    const __m128i one32 = _mm_set1_epi32(1);
    const __m128i odd = _mm_and_si128(j, one32);
    j = _mm_add_epi32(j, odd);
    y = _mm256_add_pd(y, _mm256_cvtepi32_pd(odd));
    j = _mm_and_si128(j, _mm_set1_epi32(7));  // now 0, 2, 4 or 6

    // Quadrant logic: sin polynomial for j in {2, 6}; negate for j in {2, 4}.
    const __m128i eq2 = _mm_cmpeq_epi32(j, _mm_set1_epi32(2));
    const __m128i eq4 = _mm_cmpeq_epi32(j, _mm_set1_epi32(4));
    const __m128i eq6 = _mm_cmpeq_epi32(j, _mm_set1_epi32(6));
    const __m256d use_sin =
        _mm256_castsi256_pd(_mm256_cvtepi32_epi64(_mm_or_si128(eq2, eq6)));
    const __m256d negate =
        _mm256_castsi256_pd(_mm256_cvtepi32_epi64(_mm_or_si128(eq2, eq4)));

    __m256d z = _mm256_fnmadd_pd(y, dp1, xa);
    z = _mm256_fnmadd_pd(y, dp2, z);
    z = _mm256_fnmadd_pd(y, dp3, z);
    const __m256d zz = _mm256_mul_pd(z, z);

    // sin(z) on |z| <= pi/4
    __m256d ps = _mm256_set1_pd(1.58962301576546568060e-10);
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-2.50507477628578072866e-8));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(2.75573136213857245213e-6));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.98412698295895385996e-4));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(8.33333333332211858878e-3));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.66666666666666307295e-1));
    const __m256d sin_poly =
        _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

    // cos(z) on |z| <= pi/4
    __m256d pc = _mm256_set1_pd(-1.13585365213876817300e-11);
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.08757008419747316778e-9));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-2.75573141792967388112e-7));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.48015872888517179954e-5));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-1.38888888888730564116e-3));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(4.16666666666665929218e-2));
    __m256d cos_poly = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), pc,
                                       _mm256_fnmadd_pd(zz, _mm256_set1_pd(0.5),
                                                        _mm256_set1_pd(1.0)));

    __m256d r = _mm256_blendv_pd(cos_poly, sin_poly, use_sin);
    return _mm256_xor_pd(r, _mm256_and_pd(negate, _mm256_set1_pd(-0.0)));
}

inline __m256d log4(__m256d x) {
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
    const __m256i half_bits = _mm256_set1_epi64x(0x3FE0000000000000ll);  // exponent of 0.5
    const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);

    const __m256i bits = _mm256_castpd_si256(x);
    // frexp exponent: m in [0.5, 1)
    __m256i e_i = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(1022));
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));

    // int64 -> double (values are small): magic-number trick
    const __m256i magic = _mm256_set1_epi64x(0x4338000000000000ll);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(e_i, magic)),
                              _mm256_set1_pd(6755399441055744.0));

    const __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    e = _mm256_add_pd(e, _mm256_and_pd(below, _mm256_set1_pd(-1.0)));
    m = _mm256_add_pd(m, _mm256_and_pd(below, m));  // double it where m < sqrt(1/2)
    m = _mm256_sub_pd(m, _mm256_set1_pd(1.0));

    const __m256d z = _mm256_mul_pd(m, m);

    __m256d p = _mm256_set1_pd(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(7.70838733755885391666e0));

    __m256d q = _mm256_add_pd(m, _mm256_set1_pd(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(2.31251620126765340583e1));

    __m256d y = _mm256_mul_pd(_mm256_mul_pd(m, z), _mm256_div_pd(p, q));
    y = _mm256_fmadd_pd(e, _mm256_set1_pd(-2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
    __m256d r = _mm256_add_pd(m, y);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

}  // namespace homsense::kernels::detail
