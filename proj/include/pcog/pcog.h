#ifndef PCOG_PCOG_H
#define PCOG_PCOG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PCOG_API __declspec(dllexport)
#else
#define PCOG_API __attribute__((visibility("default")))
#endif

/* Values match the core error codes one to one. */
typedef enum pcog_status {
  PCOG_OK = 0,
  PCOG_E_INVALID_ARGUMENT = 1,
  PCOG_E_PARSE = 2,
  PCOG_E_NOT_FOUND = 3,
  PCOG_E_IO = 4,
  PCOG_E_TRANSPORT = 5,
  PCOG_E_INTEGRITY = 6,
  PCOG_E_CONFIG = 7,
  PCOG_E_INFEASIBLE = 8,
  PCOG_E_QUARANTINE = 9,
  PCOG_E_CONFLICT = 10,
  PCOG_E_INTERNAL = 11
} pcog_status;

typedef struct pcog_context pcog_context;

PCOG_API const char* pcog_version(void);
PCOG_API const char* pcog_status_name(pcog_status s);

/* Message of the most recent failure on the calling thread. Never NULL. */
PCOG_API const char* pcog_last_error(void);

/* Opens a run from a config file. Relative paths resolve against its directory. */
PCOG_API pcog_status pcog_open(const char* config_path, pcog_context** out);
/* Same, from a JSON document; relative paths resolve against base_dir. */
PCOG_API pcog_status pcog_open_json(const char* config_json, const char* base_dir, pcog_context** out);
PCOG_API void pcog_close(pcog_context* ctx);

/* Validates a config without opening a run. On success *normalized_json
 * (if non-NULL) receives the resolved config; free with pcog_string_free. */
PCOG_API pcog_status pcog_check_config(const char* config_json, const char* base_dir, int check_paths,
                                       char** normalized_json);

/* Runs a named command. options_json may be NULL. *result_json, if non-NULL,
 * receives the command manifest even when the status is PCOG_E_QUARANTINE. */
PCOG_API pcog_status pcog_run(pcog_context* ctx, const char* command, const char* options_json,
                              char** result_json);

/* JSON array of command names. */
PCOG_API pcog_status pcog_commands(char** out_json);
/* Effective run directory of an open context. */
PCOG_API pcog_status pcog_run_dir(const pcog_context* ctx, char** out);

PCOG_API void pcog_string_free(char* s);

/* Byte-level edit distance. */
PCOG_API size_t pcog_levenshtein(const char* a, const char* b);
/* Normalized preference score of five 1..5 dimension scores. */
PCOG_API pcog_status pcog_p_score(const int scores[5], double* out);

#ifdef __cplusplus
}
#endif

#endif
