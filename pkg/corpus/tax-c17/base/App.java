package lgc;

public class App {
    public void boot() {
        Legacy.init();
    }
}
