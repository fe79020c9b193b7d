#ifndef CL8_H
#define CL8_H

/* C interface to the Cl_8 geometric algebra and verification library.
 *
 * Every call returns a cl8_status. On failure the message for the calling thread
 * is available from cl8_last_error() until the next failing call on that thread.
 * Strings returned through char** are owned by the caller and released with
 * cl8_string_free; multivector handles are released with cl8_mv_free.
 * Vectors are 8 doubles in the basis e1..e8; 8x8 matrices are 64 doubles, row-major. */

#include <stdint.h>

#if defined(_WIN32)
#define CL8_API __declspec(dllexport)
#else
#define CL8_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl8_status {
  CL8_OK = 0,
  CL8_ERR_INVALID_ARGUMENT = 1,
  CL8_ERR_PARSE = 2,
  CL8_ERR_RING_MISMATCH = 3,
  CL8_ERR_GENERATOR_MISMATCH = 4,
  CL8_ERR_NOT_IN_IDEAL = 5,
  CL8_ERR_PRECONDITION = 6,
  CL8_ERR_DECOMPOSITION = 7,
  CL8_ERR_NOT_IN_FIBER = 8,
  CL8_ERR_INVARIANCE = 9,
  CL8_ERR_RETRACTION = 10,
  CL8_ERR_UNKNOWN_SECTION = 11,
  CL8_ERR_CONFIG = 12,
  CL8_ERR_INTERNAL = 13
} cl8_status;

typedef enum cl8_ring { CL8_RING_EXACT = 0, CL8_RING_REAL = 1 } cl8_ring;

typedef struct cl8_mv cl8_mv;

CL8_API const char* cl8_version(void);
CL8_API const char* cl8_last_error(void);
CL8_API void cl8_string_free(char* s);

/* Multivectors. Operations on handles of different rings fail with CL8_ERR_RING_MISMATCH. */
CL8_API cl8_status cl8_mv_parse(const char* text, cl8_ring ring, int generators, cl8_mv** out);
CL8_API cl8_status cl8_mv_from_vector(const double v[8], cl8_mv** out);
CL8_API void cl8_mv_free(cl8_mv* a);
CL8_API cl8_status cl8_mv_ring(const cl8_mv* a, cl8_ring* out);
CL8_API cl8_status cl8_mv_format(const cl8_mv* a, char** out);
CL8_API cl8_status cl8_mv_mul(const cl8_mv* a, const cl8_mv* b, cl8_mv** out);
CL8_API cl8_status cl8_mv_wedge(const cl8_mv* a, const cl8_mv* b, cl8_mv** out);
CL8_API cl8_status cl8_mv_add(const cl8_mv* a, const cl8_mv* b, cl8_mv** out);
CL8_API cl8_status cl8_mv_reverse(const cl8_mv* a, cl8_mv** out);
CL8_API cl8_status cl8_mv_involute(const cl8_mv* a, cl8_mv** out);
CL8_API cl8_status cl8_mv_grade(const cl8_mv* a, int k, cl8_mv** out);
CL8_API cl8_status cl8_mv_equal(const cl8_mv* a, const cl8_mv* b, int* out);
/* Sum of coefficient products; exact values are rounded to double. */
CL8_API cl8_status cl8_mv_inner(const cl8_mv* a, const cl8_mv* b, double* out);
/* Phi(a) as a JSON 16x16 array: strings for the exact ring, numbers for the real ring. */
CL8_API cl8_status cl8_rep_json(const cl8_mv* a, char** out);

/* Exact expression evaluation with * ^ ~ ! + - and rep(); see the README grammar. */
CL8_API cl8_status cl8_eval(const char* expr, char** out);

/* Geometry. A plane is given by a frame (u, w), orthonormalized on input. */
CL8_API cl8_status cl8_phi_star(const double u[8], const double w[8], double J[64]);
CL8_API cl8_status cl8_tau(const double u[8], const double w[8], double v[8]);
CL8_API cl8_status cl8_j_v(const double v[8], double J[64]);
CL8_API cl8_status cl8_fiber_point(const double v[8], const double u[8], double frame_u[8], double frame_w[8]);
CL8_API cl8_status cl8_tau1(const double u[8], const double w[8], double t[8]);
CL8_API cl8_status cl8_theta_fiber(double theta, const double a[8], double frame_u[8], double frame_w[8]);

/* Sections S^6 -> G(2,8). A callback receives v and writes a frame of f(v). */
typedef void (*cl8_section_fn)(const double v[8], double u[8], double w[8], void* user);
CL8_API cl8_status cl8_register_section(const char* name, cl8_section_fn fn, void* user);
CL8_API cl8_status cl8_holo_defect(const char* section, const double v[8], double h, double* out);
CL8_API cl8_status cl8_nijenhuis_max(const char* section, const double v[8], double h, double* out);

/* Runs verification suites. config_json keys (all optional): suite, seed, samples,
 * fd_step, tolerances {name: value}, format ("text" | "json"), section, timings (bool).
 * On CL8_OK, *report holds the report and *exit_code is 0 (all pass), 1 (a check
 * failed) or 3 (a check hit an internal error). */
CL8_API cl8_status cl8_verify(const char* config_json, char** report, int* exit_code);
CL8_API cl8_status cl8_default_tolerances_json(char** out);

/* Writes the S^6 CSV scan (v1..v8, holo_defect, nijenhuis_max) to path. */
CL8_API cl8_status cl8_scan_s6(const char* section, int64_t samples, uint64_t seed, double fd_step, const char* path);

#ifdef __cplusplus
}
#endif

#endif
