package lgc;

public class Modern {
    public static void init() {
        int ready = 1;
    }
}
