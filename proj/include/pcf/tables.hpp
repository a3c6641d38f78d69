/* Published ratio tables 1-5: embedded expected values, computation
 * dispatch, and tolerance comparison used by `table N --check` and the
 * regression tests.
 */
#ifndef PCF_TABLES_HPP
#define PCF_TABLES_HPP

#include "pcf/precision.hpp"
#include <string>
#include <vector>

namespace pcf {

struct TableSpec {
    int which;                                   /* 1..5 */
    std::string caption;
    std::vector<std::string> row_labels;         /* n= or a= */
    std::vector<std::string> col_labels;         /* theta= or t= */
    std::vector<std::vector<double>> expected;   /* printed values */
    double tol;                                  /* per-entry tolerance */
};

const TableSpec& expected_table(int which);

/* dispatch: 1,2 -> table_poincare (piecewise / 2F1), 3,4,5 -> tables_uniform */
std::vector<std::vector<Real>> compute_table(int which, const PrecisionContext& ctx);

struct TableCheck {
    bool pass = true;
    unsigned mismatches = 0;
    double max_err = 0;       /* worst |computed - expected| */
    int bad_row = -1, bad_col = -1;
};

TableCheck check_table(int which, const std::vector<std::vector<Real>>& got);

} // namespace pcf

#endif
