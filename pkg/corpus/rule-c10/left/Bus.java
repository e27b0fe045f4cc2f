package evt;

public interface Bus {
    void post();
}
