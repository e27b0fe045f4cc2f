package lgc;

public class Legacy {
    public static void init() {
    }
}
