#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "capsim/linalg.hpp"
#include "capsim/rng.hpp"

namespace capsim::channel {

using linalg::cplx;

/// How the selector ranks relays: on current estimates of the future channel
/// (optimal needs the transmission-time estimate it cannot really have), on
/// the stale selection-time estimates, or on linearly predicted values.
enum class SelectionScheme { optimal, outdated_csi, predicted };

const char* scheme_name(SelectionScheme s);

/// Per-link table indexed by source j in {0,1} and relay i.
template <typename T>
struct PerLink {
    int relays = 0;
    std::vector<T> v;  // size 2*relays, row j then relay i

    PerLink() = default;
    PerLink(int n, T fill) : relays(n), v(static_cast<size_t>(2 * n), fill) {}
    T& at(int j, int i) { return v[static_cast<size_t>(j) * relays + i]; }
    const T& at(int j, int i) const { return v[static_cast<size_t>(j) * relays + i]; }
    bool operator==(const PerLink&) const = default;
};

struct NetworkConfig {
    int relay_count = 1;
    double source_power = 1.0;    // watts, linear
    double relay_power = 1.0;     // watts, linear
    double noise_variance = 1.0;  // watts
    PerLink<double> link_variance;

    void validate() const;
    bool operator==(const NetworkConfig&) const = default;
};

struct CsiConfig {
    PerLink<double> doppler_delay;  // normalized f_d * T per link
    int transmission_lag = 1;       // frames between selection and use
    int selection_interval = 1;     // frames between selections
    PerLink<int> prediction_length;
    PerLink<double> estimation_error_variance;

    void validate(const NetworkConfig& net) const;
    bool operator==(const CsiConfig&) const = default;
};

struct WienerPredictor {
    std::vector<double> coefficients;  // real: the covariances are real-valued
    double prediction_variance = 0.0;  // r^H R^{-1} r
    double correlation = 0.0;          // sqrt(prediction_variance / channel variance)
};

/// Everything downstream consumers need to know about one link, derived once
/// from the configuration.
struct LinkDerivedStats {
    double sigma_h2 = 1.0;     // true channel variance
    double sigma_e2 = 0.0;     // estimation error variance
    double sigma_hhat2 = 1.0;  // estimated-channel variance = sigma_h2 - sigma_e2
    double rho_e = 1.0;        // sigma_hhat2 / sigma_h2
    double rho_f = 1.0;        // fading autocorrelation at the transmission lag
    double sigma_p2 = 1.0;     // predictor output power (ridged solve)
    double rho_p = 1.0;        // sqrt(sigma_p2 / sigma_h2)

    // Correlation between the scheme's selection variable and the estimated
    // transmission-time channel, under the sampling model actually used here.
    double rho_sel_outdated = 1.0;   // |rho_f|
    double rho_sel_predicted = 1.0;  // cross / sqrt(var(h_p) sigma_hhat2)
    double sel_var_predicted = 1.0;  // exact variance of the predictor output

    double sigma_s2(SelectionScheme s) const;
    double sigma_t2() const { return sigma_hhat2; }
    double rho(SelectionScheme s) const;
};

/// One joint realization of all links at the instants the schemes need.
struct ChannelDraw {
    int relay_count = 0;
    bool has_predicted = false;
    std::vector<cplx> sel_estimate;      // estimate at selection time (2*N)
    std::vector<cplx> est_transmission;  // estimate at transmission time (2*N)
    std::vector<cplx> true_transmission; // actual channel at transmission (2*N)
    std::vector<cplx> predicted;         // predictor output (2*N)
    std::vector<cplx> history;           // concatenated per-link estimate histories
    std::vector<int> history_offset;     // 2*N+1 offsets into history
    std::vector<cplx> scratch;

    int history_len(int j, int i) const {
        int k = j * relay_count + i;
        return history_offset[k + 1] - history_offset[k];
    }
    const cplx* history_of(int j, int i) const {
        return history.data() + history_offset[j * relay_count + i];
    }
};

struct CovarianceBundle {
    linalg::HermitianMatrix history_cov;  // E{h h^H} over the stored estimates
    std::vector<cplx> cross;              // E{h * conj(transmission estimate)}
};

/// Immutable per-experiment channel state: covariance factors, predictor
/// coefficients and derived statistics for every link. Thread-safe to share;
/// sampling threads bring their own generator and draw buffer.
class ChannelModel {
public:
    ChannelModel(const NetworkConfig& net, const CsiConfig& csi);

    int relay_count() const { return net_.relay_count; }
    const NetworkConfig& network() const { return net_; }
    const CsiConfig& csi() const { return csi_; }
    const LinkDerivedStats& stats(int j, int i) const { return links_[idx(j, i)].stats; }
    const WienerPredictor& predictor(int j, int i) const { return links_[idx(j, i)].pred; }

    void init_draw(ChannelDraw& d) const;
    void sample(mc::TrialRng& rng, ChannelDraw& d) const;

    static CovarianceBundle build_covariance(int j, int i, const NetworkConfig& net,
                                             const CsiConfig& csi);
    static WienerPredictor build_predictor(int j, int i, const NetworkConfig& net,
                                           const CsiConfig& csi);

private:
    struct Link {
        int hist_len = 1;
        std::vector<double> chol;  // (L+1)^2 row-major lower factor, real
        std::vector<double> w;
        double sigma_e = 0.0;
        LinkDerivedStats stats;
        WienerPredictor pred;
    };
    int idx(int j, int i) const { return j * net_.relay_count + i; }

    NetworkConfig net_;
    CsiConfig csi_;
    std::vector<Link> links_;
    int max_hist_ = 1;
};

}  // namespace capsim::channel
