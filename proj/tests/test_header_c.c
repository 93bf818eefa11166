/* Compiled as C: the public header and library must work without C++. */

#include <stdio.h>
#include <string.h>

#include "autoseq/autoseq.h"

int main(void) {
    int bad = 0;

    if (asq_version() == 0) ++bad;

    asq_seq* seq = NULL;
    if (asq_seq_create("thue-morse", &seq) != ASQ_OK) return 1;
    uint8_t buf[12];
    if (asq_seq_prefix(seq, 12, buf) != ASQ_OK) return 1;
    const char want[12] = {0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1};
    if (memcmp(buf, want, 12) != 0) ++bad;

    uint64_t sample = 10;
    double value = 0;
    if (asq_measure_profile(buf, 12, "linear", NULL, &sample, 1, &value) != ASQ_OK) return 1;
    if (value != 6.0) ++bad;

    asq_seq_free(seq);

    if (asq_seq_create("nonesuch", &seq) != ASQ_ERR_UNKNOWN_NAME) ++bad;
    if (strcmp(asq_status_name(ASQ_OK), "ok") != 0) ++bad;

    if (bad) {
        fprintf(stderr, "%d C-surface check(s) failed\n", bad);
        return 1;
    }
    printf("C surface ok\n");
    return 0;
}
