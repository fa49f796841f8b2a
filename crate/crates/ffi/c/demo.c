#include <stdio.h>
#include "schubert.h"

int main(void) {
    SchubertModule *m = NULL;
    if (schubert_module_new("quantum", 4, NULL, &m) != SCHUBERT_STATUS_OK) {
        fprintf(stderr, "%s\n", schubert_last_error());
        return 1;
    }
    char *json = NULL;
    SchubertStatus st = schubert_multiply_json(m, 2, "1", "2,1", &json);
    if (st != SCHUBERT_STATUS_OK) {
        fprintf(stderr, "error %d: %s\n", st, schubert_last_error());
        schubert_module_free(m);
        return 1;
    }
    printf("%s\n", json);
    schubert_string_free(json);
    schubert_module_free(m);
    return 0;
}
