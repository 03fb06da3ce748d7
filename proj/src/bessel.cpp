#include "fwmpair/bessel.hpp"

#include <cassert>
#include <cmath>

namespace fwmpair::bessel {

namespace {

// kJ0Small: 19 coeffs
constexpr double kJ0Small[] = {
    0.31545594294978023913,
    -0.0087234423528522212908,
    0.26517861320333680987,
    -0.37009499387264977903,
    0.15806710233209726128,
    -0.034893769411408885163,
    0.0048191800694676044968,
    -0.0004606261662062750475,
    0.000032460328821005080806,
    -1.7619469077621507495e-6,
    7.608163592418781867e-8,
    -2.6792535305576728983e-9,
    7.8486963144794644165e-11,
    -1.9438346867370165706e-12,
    4.1253205956343739326e-14,
    -7.5885081254475463376e-16,
    1.2218515873961411034e-17,
    -1.7367896077002367683e-19,
    2.1957932033195603537e-21,
};
// kJ1Small: 19 coeffs
constexpr double kJ1Small[] = {
    0.16208969265131623021,
    -0.14897514506765210906,
    0.16099926235720970255,
    -0.082680491766817906597,
    0.02221363965496603541,
    -0.0036469406007692759578,
    0.00040503377283548218331,
    -0.000032555548668572585168,
    1.9858774049915167414e-6,
    -9.5219847567504361821e-8,
    3.6871337590971482385e-9,
    -1.1780266226958848398e-10,
    3.1601545803480033215e-12,
    -7.2217552396517734285e-14,
    1.4232144003513942316e-15,
    -2.4441972916190463893e-17,
    3.6912682997929332622e-19,
    -4.9411682676418243772e-21,
    5.9038342993012952839e-23,
};
// kJ0ModL: 20 coeffs
constexpr double kJ0ModL[] = {
    1.9992374690177417861,
    -0.00047457226455835872256,
    -0.00009850025166268310509,
    1.1602484851804887328e-6,
    9.9405873424507109838e-8,
    -5.5121860374693629717e-9,
    -1.2193246854697969346e-10,
    3.351467693157936151e-11,
    -1.4597734871995986359e-12,
    -1.5082433906387492969e-13,
    2.8191873682214166445e-14,
    -1.3017503847401401333e-15,
    -2.1181541855734063878e-16,
    4.7299810150918009129e-17,
    -3.3617220105300227145e-18,
    -3.3377104787396901151e-19,
    1.2327560539089771465e-19,
    -1.4976860124471455977e-20,
    -1.0746143855403104884e-23,
    3.7579581049747195016e-22,
};
// kJ0PhaL: 23 coeffs
constexpr double kJ0PhaL[] = {
    -0.016794374907896269969,
    -0.0071294940973073524622,
    0.000020498902030835927554,
    2.6702891276467067866e-6,
    -7.4461937864592910583e-8,
    -3.8660629330959616926e-9,
    4.2184607405920345362e-10,
    -3.6832704834986654215e-12,
    -2.4687440799980835124e-12,
    2.2779950877728801713e-13,
    2.5541670469460180639e-15,
    -2.8603570203369202891e-15,
    3.0937980884454531114e-16,
    1.2883692709225309944e-18,
    -5.294100868127252616e-18,
    8.0760390946004350894e-19,
    -3.0699851152840216074e-20,
    -1.1937752547175934372e-20,
    2.995353793191566295e-21,
    -3.0608026778579551848e-22,
    -1.4764167424302125109e-23,
    1.1906251968787827837e-23,
    -2.3175025106739098253e-24,
};
// kJ1ModL: 20 coeffs
constexpr double kJ1ModL[] = {
    2.0023027208873475652,
    0.0014354351933425342072,
    0.00030080413445710706873,
    -2.2271373722672233502e-6,
    -2.0015930667336720406e-7,
    8.5817573080430112464e-9,
    2.3689907919651191712e-10,
    -4.77471853227641878e-11,
    1.7210350995456370206e-12,
    2.166478183365301417e-13,
    -3.5465256894788960345e-14,
    1.392485159752456867e-15,
    2.8013437003451646727e-16,
    -5.6667431888761814491e-17,
    3.6427989454043629965e-18,
    4.4145982198252155447e-19,
    -1.4515267252487256056e-19,
    1.6596638898624933915e-20,
    1.7714608528378327246e-22,
    -4.4413934786990402355e-22,
};
// kJ1PhaL: 22 coeffs
constexpr double kJ1PhaL[] = {
    0.050419655115326978808,
    0.021414565164932678684,
    -0.000052582173972355944132,
    -7.0263087178844955027e-6,
    1.3811063676826413919e-7,
    8.0097861015690930856e-9,
    -6.5700730947558109283e-10,
    6.4301413316999729275e-13,
    3.6131554614081555454e-12,
    -2.8648012138515759022e-13,
    -6.0781670107231470588e-15,
    3.7089756608543599406e-15,
    -3.6319207958649191759e-16,
    -5.2158396682003701111e-18,
    6.5680286485743254337e-18,
    -9.3080782269916347586e-19,
    2.784955906075547367e-20,
    1.4775374208822500157e-20,
    -3.4461642329384503012e-21,
    3.2820346127777204063e-22,
    2.1193709612253921523e-23,
    -1.3834319404744012737e-23,
};
// kK0SmallG: 12 coeffs
constexpr double kK0SmallG[] = {
    -0.53532739323390276872,
    0.34428989992462848689,
    0.035979936515361501627,
    0.0012646154114469259234,
    0.000022862121031194517861,
    2.5347910790261494573e-7,
    1.904516377220208859e-9,
    1.0349695257633624585e-11,
    4.2598161427910825765e-14,
    1.3744654358807508969e-16,
    3.570896528508373591e-19,
    7.6316436601164373766e-22,
};
// kK1SmallG: 12 coeffs
constexpr double kK1SmallG[] = {
    -0.12818069033732506766,
    -0.10916919599320104707,
    -0.0066368784528177138601,
    -0.00016822792382067344118,
    -2.3895591808036077129e-6,
    -2.1853569024549694416e-8,
    -1.3982271326113326914e-10,
    -6.6185627529760409318e-13,
    -2.4134516242987824322e-15,
    -6.9908737312425667362e-18,
    -1.6478758098368235204e-20,
    -3.223194698439060444e-23,
};
// kK0LargeR: 34 coeffs
constexpr double kK0LargeR[] = {
    2.440303081365147685,
    -0.031448100925637743621,
    0.0015698838452819866806,
    -0.00012849549062075361503,
    0.000013949812936209439728,
    -1.8317553896323690072e-6,
    2.7668133904640546946e-7,
    -4.6604893942007379706e-8,
    8.5740329308075789672e-9,
    -1.6975342614831912087e-9,
    3.5773966878622801609e-10,
    -7.9574877618176564164e-11,
    1.8559487303327974873e-11,
    -4.5145968511896074879e-12,
    1.1403403025677563812e-12,
    -2.9800961102434110842e-13,
    8.032888401427839603e-14,
    -2.2275126170453092557e-14,
    6.3400743072524222986e-15,
    -1.8485927013429390118e-15,
    5.5120538483624349397e-16,
    -1.6782304295524575712e-16,
    5.2103894861897188889e-17,
    -1.6475798277598232063e-17,
    5.3004311704712383296e-18,
    -1.733170305272492343e-18,
    5.7551060790415506458e-19,
    -1.9390945013608378836e-19,
    6.6246065854080474711e-20,
    -2.2932182878518323136e-20,
    8.0387271110100643252e-21,
    -2.8519321807092073465e-21,
    1.0234657429015340579e-21,
    -3.713458867034036754e-22,
};
// kK1LargeR: 34 coeffs
constexpr double kK1LargeR[] = {
    2.7206261926907848011,
    0.10392373540971247189,
    -0.0028578167889117147364,
    0.00019521551077308921978,
    -0.000019361978674343058418,
    2.4064847753228618077e-6,
    -3.5019602913043241376e-7,
    5.7410835106673133439e-8,
    -1.0345761164270379614e-8,
    2.0150494628047322566e-9,
    -4.1903540679990026194e-10,
    9.2183134785451008084e-11,
    -2.1299673989782749348e-11,
    5.1396385031014227153e-12,
    -1.2891736392063198422e-12,
    3.348418755723425468e-13,
    -8.9767025376234357449e-14,
    2.4771536372217004372e-14,
    -7.0198346939681264949e-15,
    2.0387024219172181395e-15,
    -6.0570449123611428925e-16,
    1.8380928143699676921e-16,
    -5.6894603521401578382e-17,
    1.7940502151460724724e-17,
    -5.7567416626052716479e-18,
    1.8778642217788190471e-18,
    -6.2216419158066651539e-19,
    2.0919113378807387035e-19,
    -7.1327086626386282791e-20,
    2.4645736079186013544e-20,
    -8.6244764595709975881e-21,
    3.0547558662754029097e-21,
    -1.0945649534297339515e-21,
    3.9656419861530285691e-22,
};

// Clenshaw evaluation of a Chebyshev series on [a, b].
inline double cheb_eval(const double* c, int n, double a, double b, double x) {
    const double t = (2.0 * x - (a + b)) / (b - a);
    const double t2 = 2.0 * t;
    double b0 = 0.0, b1 = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        const double tmp = b0;
        b0 = t2 * b0 - b1 + c[k];
        b1 = tmp;
    }
    return t * b0 - b1 + 0.5 * c[0];
}

template <int N>
inline double cheb_eval(const double (&c)[N], double a, double b, double x) {
    return cheb_eval(c, N, a, b, x);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double j0(double x) {
    x = std::fabs(x);
    if (x <= 8.0) return cheb_eval(kJ0Small, 0.0, 64.0, x * x);
    assert(x <= 100.0 && "j0: argument outside fitted range");
    const double u = 8.0 / x;
    const double mod = cheb_eval(kJ0ModL, 0.08, 1.0, u);
    const double pha = cheb_eval(kJ0PhaL, 0.08, 1.0, u);
    return std::sqrt(2.0 / (kPi * x)) * mod * std::cos(x - 0.25 * kPi + pha);
}

double j1(double x) {
    const double ax = std::fabs(x);
    double r;
    if (ax <= 8.0) {
        r = ax * cheb_eval(kJ1Small, 0.0, 64.0, ax * ax);
    } else {
        assert(ax <= 100.0 && "j1: argument outside fitted range");
        const double u = 8.0 / ax;
        const double mod = cheb_eval(kJ1ModL, 0.08, 1.0, u);
        const double pha = cheb_eval(kJ1PhaL, 0.08, 1.0, u);
        r = std::sqrt(2.0 / (kPi * ax)) * mod * std::cos(ax - 0.75 * kPi + pha);
    }
    return x < 0.0 ? -r : r;
}

double i0(double x) {
    x = std::fabs(x);
    // Power series; used only for x <= 2 where it converges in ~12 terms.
    assert(x <= 2.0 + 1e-12);
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 24; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double i1(double x) {
    const double ax = std::fabs(x);
    assert(ax <= 2.0 + 1e-12);
    const double q = 0.25 * ax * ax;
    double term = 0.5 * ax, sum = term;
    for (int k = 1; k < 24; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return x < 0.0 ? -sum : sum;
}

double k0(double x) {
    assert(x > 0.0 && "k0 requires x > 0");
    if (x <= 2.0) {
        const double g = cheb_eval(kK0SmallG, 0.0, 4.0, x * x);
        return -std::log(0.5 * x) * i0(x) + g;
    }
    const double u = 2.0 / x;
    const double r = cheb_eval(kK0LargeR, 1e-8, 1.0, u);
    return std::exp(-x) / std::sqrt(x) * r;
}

double k1(double x) {
    assert(x > 0.0 && "k1 requires x > 0");
    if (x <= 2.0) {
        const double g = cheb_eval(kK1SmallG, 0.0, 4.0, x * x);
        return std::log(0.5 * x) * i1(x) + 1.0 / x + x * g;
    }
    const double u = 2.0 / x;
    const double r = cheb_eval(kK1LargeR, 1e-8, 1.0, u);
    return std::exp(-x) / std::sqrt(x) * r;
}

}  // namespace fwmpair::bessel
