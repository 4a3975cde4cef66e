#include <stdio.h>
#include <string.h>

#include "hecke_g5.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "line %d: %s\n", __LINE__, #cond);         \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  H5Elt *num = NULL;
  H5Elt *den = NULL;
  CHECK(h5_elt_parse("2*L-1", &num) == H5_STATUS_OK);
  CHECK(h5_elt_parse("12", &den) == H5_STATUS_OK);

  int64_t e = 0;
  H5Elt *rnum = NULL;
  CHECK(h5_reduce(num, den, &e, &rnum, NULL) == H5_STATUS_OK);
  CHECK(e == 6);
  char *s = h5_elt_to_string(rnum);
  CHECK(strcmp(s, "18*L+11") == 0);
  h5_string_free(s);

  uint64_t index = 0;
  H5Elt *three = h5_elt_new(3, 0);
  CHECK(h5_index(three, &index) == H5_STATUS_OK && index == 10);

  H5Elt *bad = NULL;
  CHECK(h5_elt_parse("2*L+x", &bad) == H5_STATUS_SYNTAX_ERROR);
  CHECK(bad == NULL);
  CHECK(strstr(h5_last_error_message(), "position 4") != NULL);

  h5_elt_free(num);
  h5_elt_free(den);
  h5_elt_free(rnum);
  h5_elt_free(three);
  printf("ok\n");
  return 0;
}
