/* C interface to the OG(5,10) quantum Schubert calculus engine.
 *
 * Every call returns an ogq_status. On success the textual result (plain
 * text or JSON, see ogq_set_format) is available from ogq_result until the
 * next call on the same engine; on failure ogq_last_error describes it.
 * Classes are written as digit strings ("4321") or comma lists ("4,3,2,1"),
 * separated by whitespace. An engine must not be used from two threads at
 * once. */
#ifndef OGQ_OGQ_H
#define OGQ_OGQ_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define OGQ_API __attribute__((visibility("default")))
#else
#define OGQ_API
#endif

typedef struct ogq_engine ogq_engine;

typedef enum ogq_status {
  OGQ_OK = 0,
  OGQ_ERR_ARGUMENT = 1,      /* null pointer or invalid option value */
  OGQ_ERR_PARSE = 2,         /* malformed classes, cache or fixture */
  OGQ_ERR_DOMAIN = 3,        /* class outside OG(5,10), bad degree */
  OGQ_ERR_DIMENSION = 4,     /* dimension condition fails */
  OGQ_ERR_UNDERDETERMINED = 5,
  OGQ_ERR_INCONSISTENT = 6,  /* two derivations disagree */
  OGQ_ERR_FIXTURE = 7,       /* fixture invariant violated */
  OGQ_ERR_INDIVISIBLE = 8,
  OGQ_ERR_IO = 9,
  OGQ_ERR_INTERNAL = 10
} ogq_status;

typedef enum ogq_format { OGQ_FORMAT_TEXT = 0, OGQ_FORMAT_JSON = 1 } ogq_format;

OGQ_API ogq_engine* ogq_engine_new(void);
OGQ_API void ogq_engine_free(ogq_engine* engine);

OGQ_API const char* ogq_result(const ogq_engine* engine);
OGQ_API const char* ogq_last_error(const ogq_engine* engine);
OGQ_API const char* ogq_status_name(ogq_status status);

OGQ_API ogq_status ogq_set_jobs(ogq_engine* engine, int jobs);
OGQ_API ogq_status ogq_set_format(ogq_engine* engine, ogq_format format);

/* Invariant cache: line-delimited JSON. Loading a missing file is not an
 * error. */
OGQ_API ogq_status ogq_cache_load(ogq_engine* engine, const char* path);
OGQ_API ogq_status ogq_cache_save(ogq_engine* engine, const char* path);
OGQ_API ogq_status ogq_cache_size(const ogq_engine* engine, unsigned long* size);

/* Line number I_1 of the given classes, by divided differences. */
OGQ_API ogq_status ogq_lines(ogq_engine* engine, const char* classes);
/* All line numbers with classes of codimension >= 2. */
OGQ_API ogq_status ogq_lines_enumerate(ogq_engine* engine);

/* Two classes: cup product. Three classes: triple intersection number. */
OGQ_API ogq_status ogq_classical(ogq_engine* engine, const char* classes);

/* I_d of the given classes; the value is also written to *value_out as a
 * decimal string when value_out is not null (engine-owned, valid until the
 * next call). */
OGQ_API ogq_status ogq_gw(ogq_engine* engine, int degree, const char* classes, const char** value_out);

/* Runs the bootstrap to I_7 at seven points, plus every gw row of the table
 * directory when tables_dir is not null. */
OGQ_API ogq_status ogq_bootstrap(ogq_engine* engine, const char* tables_dir);

/* Recomputes every fixture table. *passed is 1 when all rows match. */
OGQ_API ogq_status ogq_verify(ogq_engine* engine, const char* tables_dir, int* passed);

/* First-order deformation check. *unramified is 1 for an UNRAMIFIED verdict. */
OGQ_API ogq_status ogq_defcheck(ogq_engine* engine, const char* fixture_path, int* unramified);

OGQ_API const char* ogq_version(void);

#ifdef __cplusplus
}
#endif

#endif
