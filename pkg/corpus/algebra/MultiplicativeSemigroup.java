package algebra;

interface MultiplicativeSemigroup <T> {

    T times (T right);

}
