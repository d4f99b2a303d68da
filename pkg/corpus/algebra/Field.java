package algebra;

interface Field <T>
    extends AdditiveGroup <T>,
            MultiplicativeGroup <T> {

    T getMultInv() throws ArithmeticException; // div by Zero!

}
