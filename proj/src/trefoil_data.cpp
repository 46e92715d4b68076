// Bundled Fourier coefficients of the five-body trefoil orbit (n=5, k=3,
// resonance 3:1, m=25): real/imaginary parts of (u1,u2,u3)_l for l = 0..24.
// Negative modes follow from the conjugate symmetry (u_j)_{-l} = (u_j)_l^*.

#include "choreo/solver.hpp"

namespace choreo {

namespace {
// columns: Re u1, Im u1, Re u2, Im u2, Re u3, Im u3
constexpr double kTrefoilU[25][6] = {
    {2.365605595111259e-01, 0.0, -2.586486484802218e-11, 0.0, 0.0, 0.0},
    {2.730238208518935e-01, -8.574371389918268e-04, 9.594366126621117e-04, 3.055023346756821e-01,
     3.183998216275582e-04, 1.013843797046923e-01},
    {2.685276027891537e-03, -1.686650070612183e-05, -1.686650070615572e-05, -2.685276027891251e-03,
     -1.623160460830562e-04, -2.584195753881417e-02},
    {-4.758502906990690e-03, 4.483372035078380e-05, -4.483372035075908e-05, -4.758502906990715e-03,
     6.528204100190321e-05, 6.928820000785788e-03},
    {1.883378890295841e-03, -2.366033392747678e-05, 3.143172370973051e-05, 2.501986861440681e-03,
     -1.766651472817732e-05, -1.406266734076041e-03},
    {-5.999006965280112e-04, 9.420748338183218e-06, -1.393289282442757e-05, -8.872280378635012e-04,
     6.028392369542407e-18, -5.065555035359391e-18},
    {8.811248455572393e-05, -1.660505953485738e-06, 3.309334986825996e-06, 1.756053477440146e-04,
     2.212344038166846e-06, 1.173950188081502e-04},
    {8.498774137771074e-06, -1.868635687922962e-07, -1.868635687932195e-07, -8.498774137767349e-06,
     -1.286693928996992e-06, -5.852034835941615e-05},
    {-1.218752697705919e-05, 3.062649564066910e-07, -3.062649564072555e-07, -1.218752697706007e-05,
     4.623904740337318e-07, 1.840039558482767e-05},
    {5.555183124075654e-06, -1.570568558997190e-07, 1.997034024758708e-07, 7.063613764706126e-06,
     -9.561467803603867e-08, -3.381941146020149e-06},
    {-1.507114521228540e-06, 4.734666605843514e-08, -7.071044766269389e-08, -2.250818294936407e-06,
     3.032901443588402e-19, 1.295911152109998e-19},
    {2.335200664238406e-07, -8.070306668417385e-09, 1.593213943378485e-08, 4.610077899825280e-07,
     1.073253754609784e-08, 3.105536094276917e-07},
    {2.104244568410417e-08, -7.933840614338345e-10, -7.933840610780110e-10, -2.104244568485882e-08,
     -5.811254007216032e-09, -1.541283763438269e-07},
    {-3.290905327417571e-08, 1.344313219810082e-09, -1.344313219942516e-09, -3.290905327451859e-08,
     1.877957666662263e-09, 4.597277465765067e-08},
    {1.395325137847766e-08, -6.138803968764976e-10, 7.771252183448973e-10, 1.766373966056443e-08,
     -3.685236237414536e-10, -8.376391836754665e-09},
    {-3.732874395549102e-09, 1.759771959433038e-10, -2.610270876784223e-10, -5.536974981491839e-09,
     7.195923927456951e-20, 7.183652045118199e-20},
    {5.929064335140302e-10, -2.981756749601868e-11, 5.665698400826084e-11, 1.126593914301232e-09,
     3.809015322039982e-11, 7.574023856816297e-10},
    {4.804400016695753e-11, -2.567445994432811e-12, -2.567446178131416e-12, -4.804399996475025e-11,
     -1.932234422136176e-11, -3.615743781797638e-10},
    {-7.591409192695278e-11, 4.295939763834585e-12, -4.295939829539944e-12, -7.591409223386180e-11,
     5.943004126841669e-12, 1.050195703792485e-10},
    {3.114187654313435e-11, -1.860435538023476e-12, 2.361958845379412e-12, 3.953689255216923e-11,
     -1.143913421869850e-12, -1.914799688503148e-11},
    {-8.409739529661349e-12, 5.289131681837649e-13, -7.792542267774140e-13, -1.239017293452956e-11,
     1.543621735017767e-19, 7.884177072944098e-21},
    {1.333788472823494e-12, -8.809217097487679e-14, 1.640470271719594e-13, 2.483807275096231e-12,
     1.097557417499826e-13, 1.661794417444211e-12},
    {1.036015543763710e-13, -7.169318194234388e-15, -7.169447461203913e-15, -1.036016587196382e-13,
     -5.347398762479633e-14, -7.727301224303588e-13},
    {-1.573324226886791e-13, 1.138423940937104e-14, -1.138425538834881e-14, -1.573324586440305e-13,
     1.631244902296707e-14, 2.254425161892293e-13},
    {6.514968598200342e-14, -4.919794693209673e-15, 6.284792512394748e-15, 8.322595890650579e-14,
     -3.120164368146607e-15, -4.131838042098719e-14},
};
}  // namespace

SeqVec<Cd> bundled_trefoil_u() {
    SeqVec<Cd> u(3, 24);
    for (long l = 0; l <= 24; ++l) {
        for (int p = 0; p < 3; ++p) {
            const Cd c{kTrefoilU[l][2 * p], kTrefoilU[l][2 * p + 1]};
            u[p].ref(l) = c;
            if (l > 0) u[p].ref(-l) = std::conj(c);
        }
    }
    return u;
}

}  // namespace choreo
