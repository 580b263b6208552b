#ifndef COMMITTEE_H
#define COMMITTEE_H

/* Generated by the committee-ffi build script; edit src/lib.rs instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a fallible call.
typedef enum CommitteeStatus {
  // The call succeeded.
  COMMITTEE_STATUS_OK = 0,
  // A required pointer argument was null.
  COMMITTEE_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  COMMITTEE_STATUS_INVALID_UTF8 = 2,
  // Input text did not parse as a profile.
  COMMITTEE_STATUS_PARSE_ERROR = 3,
  // An argument violated a documented precondition.
  COMMITTEE_STATUS_INVALID_ARGUMENT = 4,
  // Reading a file failed.
  COMMITTEE_STATUS_IO_ERROR = 5,
} CommitteeStatus;

// Opaque handle to a parsed approval profile.
typedef struct CommitteeProfile CommitteeProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the library version as a static NUL-terminated string.
const char *committee_version(void);

// Returns the message of the most recent failure on the calling thread, or
// null if the most recent call succeeded.
//
// The pointer stays valid until the next library call on the same thread.
const char *committee_last_error_message(void);

// Parses profile text ("n m" header, then one line of approved indices per
// voter) into a new handle. Returns null on failure; see
// [`committee_last_error_message`].
//
// # Safety
// `text` must be null or point to a NUL-terminated string.
struct CommitteeProfile *committee_profile_parse(const char *text);

// Reads a profile file into a new handle. Returns null on failure; see
// [`committee_last_error_message`].
//
// # Safety
// `path` must be null or point to a NUL-terminated string.
struct CommitteeProfile *committee_profile_read_file(const char *path);

// Releases a handle. Null is a no-op.
//
// # Safety
// `profile` must be null or a pointer returned by this library that has not
// been freed yet.
void committee_profile_free(struct CommitteeProfile *profile);

// Returns the number of voters, or 0 for a null handle.
//
// # Safety
// `profile` must be null or a live handle from this library.
uint32_t committee_profile_voters(const struct CommitteeProfile *profile);

// Returns the number of candidates, or 0 for a null handle.
//
// # Safety
// `profile` must be null or a live handle from this library.
uint32_t committee_profile_candidates(const struct CommitteeProfile *profile);

// Runs a selection algorithm and writes the chosen committee.
//
// `algorithm` is one of the CLI identifiers ("greedy", "greedy-eps",
// "local-search", "approval-voting", "ls-pav", "greedy-incomplete",
// "ls-incomplete", "greedy-inaccurate"). `t` is the query-set size used by
// the sampled algorithms (pass 0 when not applicable) and `p` the response
// flip probability (pass 0 for accurate responses). On success,
// `out_members` receives the selected candidate indices, `out_len` how many
// were written, and `out_score` the committee's coverage score on the true
// ballots.
//
// # Safety
// `profile` must be a live handle; `algorithm` a NUL-terminated string;
// `out_members` must point to at least `k` writable elements; `out_len` and
// `out_score` must be writable.
enum CommitteeStatus committee_select(const struct CommitteeProfile *profile,
                                      const char *algorithm,
                                      uint32_t k,
                                      uint32_t t,
                                      double p,
                                      uint64_t seed,
                                      uint32_t *out_members,
                                      uint32_t *out_len,
                                      double *out_score);

// Computes the coverage score (fraction of voters approving at least one
// member) of an arbitrary candidate set.
//
// # Safety
// `profile` must be a live handle; `members` must point to `len` readable
// elements; `out_score` must be writable.
enum CommitteeStatus committee_cc_score(const struct CommitteeProfile *profile,
                                        const uint32_t *members,
                                        uint32_t len,
                                        double *out_score);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMMITTEE_H */
