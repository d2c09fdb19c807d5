/* Build a balanced non-transitive cycle and print it.
 *
 *   cargo build -p ntdice-ffi --release
 *   cc crates/ffi/examples/cycle.c -Icrates/ffi/include \
 *      target/release/libntdice_ffi.a -lpthread -ldl -lm -o cycle
 *   ./cycle 5 3
 */
#include <stdio.h>
#include <stdlib.h>

#include "ntdice.h"

int main(int argc, char **argv) {
    size_t dice = argc > 1 ? (size_t)atoi(argv[1]) : 3;
    size_t sides = argc > 2 ? (size_t)atoi(argv[2]) : 3;

    NtdDiceSet *set = NULL;
    if (ntd_build_cycle_set(dice, sides, &set) != NTD_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ntd_last_error_message());
        return 2;
    }

    char *text = NULL;
    ntd_dice_set_format(set, &text);
    fputs(text, stdout);
    ntd_string_free(text);

    bool balanced = false;
    uint64_t num = 0, den = 0;
    ntd_is_balanced(set, &balanced, &num, &den);
    printf("victorious probability: %llu/%llu\n", (unsigned long long)num,
           (unsigned long long)den);

    ntd_dice_set_free(set);
    return balanced ? 0 : 1;
}
