package algebra;

interface MultiplicativeMonoid <T>
    extends MultiplicativeSemigroup <T> {

    T getOne(); // the multiplicative neutral element

}
