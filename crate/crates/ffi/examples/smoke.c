/* Minimal C client: parse a bundle, print its cohomology, run a suite. */
#include <stdio.h>
#include "v12.h"

int main(void) {
    V12Bundle *b = NULL;
    if (v12_bundle_parse("O(1)", &b) != V12_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", v12_last_error());
        return 1;
    }
    uint64_t dims[11] = {0};
    if (v12_bundle_cohomology(b, dims, 11) != V12_STATUS_OK) return 1;
    printf("h0(O(1)) = %llu\n", (unsigned long long)dims[0]);
    v12_bundle_free(b);

    V12Status s = v12_bundle_parse("dual(", &b);
    printf("dual( -> %s: %s\n", v12_status_name(s), v12_last_error());

    V12Report *r = NULL;
    if (v12_verify("cherns", &r) != V12_STATUS_OK) return 1;
    int pass = 0;
    size_t total = 0, passed = 0;
    v12_report_pass(r, &pass);
    v12_report_counts(r, &total, &passed);
    printf("cherns: %zu/%zu pass=%d\n", passed, total, pass);
    v12_report_free(r);
    return dims[0] == 16 && s == V12_STATUS_SYNTAX && pass ? 0 : 1;
}
