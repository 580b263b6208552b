#include <assert.h>
#include <math.h>
#include <stdio.h>
#include "committee.h"

int main(void) {
    CommitteeProfile *profile = committee_profile_parse("4 3\n0\n0 2\n1\n2\n");
    assert(profile != NULL);
    assert(committee_profile_voters(profile) == 4);
    assert(committee_profile_candidates(profile) == 3);

    uint32_t members[2];
    uint32_t len = 0;
    double score = 0.0;
    CommitteeStatus status =
        committee_select(profile, "greedy", 2, 0, 0.0, 42, members, &len, &score);
    assert(status == COMMITTEE_STATUS_OK);
    assert(len == 2);
    assert(fabs(score - 0.75) < 1e-12);

    status = committee_select(profile, "bogus", 2, 0, 0.0, 42, members, &len, &score);
    assert(status == COMMITTEE_STATUS_INVALID_ARGUMENT);
    assert(committee_last_error_message() != NULL);

    committee_profile_free(profile);
    printf("C smoke test passed (version %s)\n", committee_version());
    return 0;
}
