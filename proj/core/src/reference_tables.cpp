#include "risim/reference_tables.hpp"

namespace risim {

const std::vector<HpbwReferenceRow>& hpbw_reference_rows() {
    static const std::vector<HpbwReferenceRow> rows = {
        {8, 30.0, 14.73, 14.84},
        {8, 45.0, 18.25, 18.38},
        {8, 60.0, 28.56, 28.85},
        {16, 30.0, 7.33, 7.2},
        {16, 45.0, 9.01, 9.02},
        {16, 60.0, 12.97, 12.99},
        {32, 30.0, 3.66, 3.67},
        {32, 45.0, 4.49, 4.49},
        {32, 60.0, 6.38, 6.38},
        {64, 30.0, 1.83, 1.83},
        {64, 45.0, 2.24, 2.24},
        {64, 60.0, 3.18, 3.18},
        {64, 75.0, 6.26, 6.27},
    };
    return rows;
}

const std::vector<DeploymentReferenceRow>& deployment_reference_rows() {
    static const std::vector<DeploymentReferenceRow> rows = {
        {5.0, 7.07, 1.8023, 0.5097, 32.16},
        {6.0, 8.49, 1.5019, 0.5409, 32.41},
        {7.0, 9.90, 1.2874, 0.5598, 32.56},
        {8.0, 11.31, 1.1264, 0.5902, 32.79},
        {9.0, 12.73, 1.0013, 0.6086, 32.93},
        {10.0, 14.14, 0.9011, 0.6019, 32.88},
        {11.0, 15.56, 0.8192, 0.5842, 32.75},
        {13.0, 18.38, 0.6932, 0.5346, 32.36},
        {15.0, 21.21, 0.6008, 0.4828, 31.92},
        {17.0, 24.04, 0.5301, 0.4367, 31.48},
        {19.0, 26.87, 0.4743, 0.3959, 31.06},
    };
    return rows;
}

} // namespace risim
