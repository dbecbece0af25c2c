#include <stdio.h>
#include "hermite_elliptic.h"

int main(void) {
    HeContext *ctx = he_context_new();
    HeIntegralSpec spec = {
        .kind = HE_INTEGRAL_KIND_HALF_LINE_GENERAL,
        .a = 1.0, .b = 1.0, .nu = 2.0, .m = 2.0,
    };
    HeReport r;
    if (he_integral_eval(ctx, &spec, &r) != HE_STATUS_OK) {
        fprintf(stderr, "error: %s\n", he_last_error(ctx));
        he_context_free(ctx);
        return 1;
    }
    printf("%.17g (err %.3g, %llu terms)\n", r.value, r.abs_err_est, (unsigned long long)r.terms_used);
    he_context_free(ctx);
    return 0;
}
