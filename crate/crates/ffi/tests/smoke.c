#include <math.h>
#include <stdio.h>
#include <string.h>
#include "rootzeta.h"

int main(void) {
    RzConfig *cfg = NULL;
    if (rz_config_new(128, 1e-10, 0, &cfg) != RZ_STATUS_OK) return 1;

    double s[6] = {2, 1, 1, 1, 1, 1};
    RzValue *v = NULL;
    if (rz_zeta_g2(cfg, s, &v) != RZ_STATUS_OK) return 2;
    if (fabs(rz_value_f64(v) - 0.0099527234) > 1e-10) return 3;
    rz_value_free(v);

    RzExpr *e = NULL;
    char *text = NULL;
    if (rz_closed_form(1, 1, 1, 1, &e) != RZ_STATUS_OK) return 4;
    if (rz_expr_display(e, &text) != RZ_STATUS_OK) return 5;
    printf("%s\n", text);
    if (strcmp(text, "1/18*zeta(2)*zeta(5) - 109/1296*zeta(7)") != 0) return 6;
    rz_string_free(text);
    rz_expr_free(e);

    double ones[6] = {1, 1, 1, 1, 1, 1};
    if (rz_zeta_g2(cfg, ones, &v) != RZ_STATUS_CONVERGENCE) return 7;
    if (rz_last_error() == NULL) return 8;

    rz_config_free(cfg);
    return 0;
}
