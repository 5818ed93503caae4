/* Apache License, Version 2.0 */
/*
 * C interface to the rtopo region-topology library.
 *
 * Regions are opaque handles created from region documents (JSON text, see
 * README). Every query returns a status code; on RTOPO_ERROR the failing
 * domain-error name and message are available from rtopo_last_error_name()
 * and rtopo_last_error_message() (thread-local). Strings returned through
 * out-parameters are heap-allocated; release them with rtopo_string_free().
 */
#ifndef RTOPO_H
#define RTOPO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rtopo_region rtopo_region;

typedef enum rtopo_status {
  RTOPO_OK = 0,
  RTOPO_ERROR = 1,        /* domain error; inspect rtopo_last_error_name() */
  RTOPO_BAD_ARGUMENT = 2, /* null handle, bad method string, ... */
} rtopo_status;

const char* rtopo_last_error_name(void);
const char* rtopo_last_error_message(void);

/* Parses a region document, validates the rings, evaluates the expression
 * and analyzes the region (components, levels, link graph, atoms). */
rtopo_status rtopo_region_parse(const char* json_text, rtopo_region** out);
void rtopo_region_free(rtopo_region* region);
void rtopo_string_free(char* text);

/* Canonical serialization of the parsed document. */
rtopo_status rtopo_region_document(const rtopo_region* region, char** out_json);

/* [{"id":..,"kind":"positive|hole|unbounded","level":..,"area":"p/q"|null}] */
rtopo_status rtopo_region_components(const rtopo_region* region, char** out_json);

/* "SIMPLE" | "SIMPLE_WITH_HOLES" | "COMPOSITE" | "GENERAL" */
rtopo_status rtopo_region_classify(const rtopo_region* region, char** out_text);

/* [{"ring":[[x,y],...],"roles":[{"role":..,"component":..},...]}] */
rtopo_status rtopo_region_atoms(const rtopo_region* region, char** out_json);

rtopo_status rtopo_region_graph_dot(const rtopo_region* region, char** out_text);
rtopo_status rtopo_region_graph_json(const rtopo_region* region, char** out_json);

/* method: "global", "local" or "both". Result object carries the matrix
 * (9-char row-major string and 3x3 array), the RCC8 name when the pattern
 * is one of the eight simple-region matrices, and for "both" an
 * "AGREE"/"DISAGREE" verdict. */
rtopo_status rtopo_relate(const rtopo_region* a, const rtopo_region* b,
                          const char* method, char** out_json);

/* Kind- and level-preserving link-graph isomorphism; writes 0 or 1. */
rtopo_status rtopo_isomorphic(const rtopo_region* a, const rtopo_region* b,
                              int* out);

/* Drops small level-1 components first when min_area (exact rational text,
 * may be NULL) is given, then performs leaf drops: all of them when steps
 * is negative, at most `steps` otherwise. Returns a region document. */
rtopo_status rtopo_generalize(const rtopo_region* region, const char* min_area,
                              long steps, char** out_doc_json);

#ifdef __cplusplus
}
#endif

#endif
